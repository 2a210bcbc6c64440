"""Structure constants of quantized sl(N+1) above the free algebra.

This module supplies, over the rewriting engine:

* Jimbo root vectors f_{i,j} (the q-bracket recursion) and ordered PBW
  monomials built from them, with conversion both ways between the
  normal-word basis and the PBW basis;
* Cartan-part elements: finite k-lattice combinations such as the h_i that
  decorate Shapovalov summands;
* the twisted adjoint calculus for a fixed simple generator F = f_beta:
  the grading automorphism sigma, the sigma-derivation ad_F, its iterates,
  the finite expansion of F**l * u, and the one-parameter conjugation
  operators Psi_r that interpolate u -> F**r u F**-r, including a formal
  variant whose scalars live in a Laurent extension by t = v**r.

All computations that need equality in the quotient take a RewriteSystem.
"""

from __future__ import annotations

from functools import lru_cache

from .freealg import NCPoly, RewriteSystem, deglex_key
from .roots import alpha, cartan_entry, kostant_partitions, pairing
from .scalars import R_ONE, R_ZERO, RatQ, WeightScalar, qbinom, qbinom_formal


class SingularSystem(Exception):
    """A PBW change-of-basis system was singular: the rewrite system is
    inconsistent with the PBW count and the computation must stop."""


class NotRightDivisible(Exception):
    """An element was not right-divisible by the requested power of F, i.e.
    a conjugation-operator result kept a genuinely negative F power."""


class NilpotencyCapExceeded(Exception):
    """ad_F iterates failed to vanish within the guaranteed bound."""


# ----------------------------------------------------------------------------
# Jimbo root vectors and PBW monomials
# ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def jimbo(i: int, j: int, n: int) -> NCPoly:
    """Root vector f_{i,j}: f_{i,i+1} is the generator f_i, and for j > i+1
    f_{i,j} = q f_{i,j-1} f_{j-1,j} - 1/q f_{j-1,j} f_{i,j-1}."""
    if not 1 <= i < j <= n + 1:
        raise ValueError("root vector indices out of range")
    if j == i + 1:
        return NCPoly.letter(i, n)
    a = jimbo(i, j - 1, n)
    b = NCPoly.letter(j - 1, n)
    q = RatQ.q_power(1)
    return (a * b).scale(q) - (b * a).scale(q.inverse())


def is_pbw_monomial(factors) -> bool:
    return all(factors[k] <= factors[k + 1] for k in range(len(factors) - 1))


def pbw_multidegree(factors, n: int) -> tuple[int, ...]:
    d = [0] * n
    for (i, j) in factors:
        for k in range(i, j):
            d[k - 1] += 1
    return tuple(d)


def expand_pbw(factors, n: int) -> NCPoly:
    """Expansion of an ordered product of root vectors into free words."""
    out = NCPoly.one(n)
    for (i, j) in factors:
        out = out * jimbo(i, j, n)
    return out


def f_monomial_of_index_set(I) -> tuple[tuple[int, int], ...]:
    """The multiplicative chain attached to an index set: consecutive pairs
    (j_0,j_1)(j_1,j_2)... of its elements; a singleton gives the empty
    monomial, i.e. the identity."""
    return tuple((I[k], I[k + 1]) for k in range(len(I) - 1))


def pbw_monomials(mu, n: int) -> list[tuple[tuple[int, int], ...]]:
    """All PBW monomials of a given multidegree: the multiset partitions of
    mu into positive roots, each sorted into lex order."""
    return [tuple(sorted(part)) for part in kostant_partitions(tuple(mu))]


# ----------------------------------------------------------------------------
# Exact linear algebra over RatQ
# ----------------------------------------------------------------------------

def solve_linear(cols: list[dict], rhs: dict):
    """Solve sum_c x_c * cols[c] = rhs over RatQ.

    Returns ("ok", xs), ("singular",) when the columns are dependent, or
    ("inconsistent",) when rhs is outside the column span.
    """
    rows = sorted({w for col in cols for w in col} | set(rhs), key=deglex_key)
    idx = {w: r for r, w in enumerate(rows)}
    m, k = len(rows), len(cols)
    A = [[R_ZERO] * k for _ in range(m)]
    for c, col in enumerate(cols):
        for w, x in col.items():
            A[idx[w]][c] = x
    b = [R_ZERO] * m
    for w, x in rhs.items():
        b[idx[w]] = x
    r = 0
    for c in range(k):
        p = next((row for row in range(r, m) if A[row][c]), None)
        if p is None:
            return ("singular",)
        A[r], A[p] = A[p], A[r]
        b[r], b[p] = b[p], b[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        b[r] = b[r] * inv
        for row in range(m):
            if row != r and A[row][c]:
                f = A[row][c]
                A[row] = [x - f * y for x, y in zip(A[row], A[r])]
                b[row] = b[row] - f * b[r]
        r += 1
    for row in range(r, m):
        if b[row]:
            return ("inconsistent",)
    return ("ok", b[:k])


_PBW_BASIS_CACHE: dict = {}


def _pbw_basis_columns(mu, rs: RewriteSystem):
    key = (id(rs), tuple(mu))
    got = _PBW_BASIS_CACHE.get(key)
    if got is None:
        monos = pbw_monomials(mu, rs.n)
        cols = [rs.normal_form(expand_pbw(M, rs.n)).terms for M in monos]
        got = (monos, cols)
        _PBW_BASIS_CACHE[key] = got
    return got


def to_pbw(p: NCPoly, rs: RewriteSystem) -> dict:
    """Coordinates of a homogeneous element in the PBW basis.

    Found by expanding every PBW monomial of the right multidegree through
    the rewriting engine and solving the resulting linear system; a singular
    system would mean the rewriting engine contradicts the PBW count and is
    reported loudly.
    """
    nf = rs.normal_form(p)
    if nf.is_zero():
        return {}
    mu = nf.multidegree()
    monos, cols = _pbw_basis_columns(mu, rs)
    res = solve_linear(cols, nf.terms)
    if res[0] == "singular":
        raise SingularSystem(f"PBW basis matrix singular at multidegree {mu}")
    if res[0] == "inconsistent":
        raise SingularSystem(f"element outside PBW span at multidegree {mu}")
    return {M: c for M, c in zip(monos, res[1]) if c}


def from_pbw(coords: dict, n: int) -> NCPoly:
    out = NCPoly.zero(n)
    for M, c in coords.items():
        out = out + expand_pbw(M, n).scale(c)
    return out


# ----------------------------------------------------------------------------
# Cartan elements
# ----------------------------------------------------------------------------

class CartanElement:
    """Finite k-combination sum_gamma c_gamma k_gamma, gamma in the root
    lattice written in simple-root coordinates.  K_mu is k_{2 mu}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for g, c in terms.items():
                if not isinstance(c, RatQ):
                    c = RatQ.from_int(c)
                if c.num:
                    clean[tuple(g)] = c
        self.terms = clean

    @classmethod
    def one(cls, n: int) -> "CartanElement":
        return cls(n, {(0,) * n: R_ONE})

    @classmethod
    def k_power(cls, gamma, n: int, coeff=R_ONE) -> "CartanElement":
        return cls(n, {tuple(gamma): coeff})

    def __add__(self, other):
        if not isinstance(other, CartanElement):
            return NotImplemented
        terms = dict(self.terms)
        for g, c in other.terms.items():
            s = terms.get(g, R_ZERO) + c
            if s.num:
                terms[g] = s
            elif g in terms:
                del terms[g]
        return CartanElement(self.n, terms)

    def __neg__(self):
        return CartanElement(self.n, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CartanElement):
            return NotImplemented
        terms: dict = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = tuple(a + b for a, b in zip(g1, g2))
                s = terms.get(g, R_ZERO) + c1 * c2
                if s.num:
                    terms[g] = s
                elif g in terms:
                    del terms[g]
        return CartanElement(self.n, terms)

    def scale(self, c) -> "CartanElement":
        return CartanElement(self.n, {g: c * x for g, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, CartanElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for g, c in self.sorted_terms():
            if any(g):
                gs = "k[" + ",".join(map(str, g)) + "]"
                parts.append(f"({c})*{gs}")
            else:
                parts.append(f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"CartanElement({self})"


def h_cartan(i: int, n: int) -> CartanElement:
    """The Cartan-part factor h_i, expressed on the k-lattice basis:
    h_i = -1/q * (v - v**(1-2i) K_{sigma_i}**-2) / (v - 1/v)."""
    denom = RatQ.v_power(1) - RatQ.v_power(-1)
    qinv = RatQ.q_power(-1)
    c0 = -(qinv * RatQ.v_power(1)) / denom
    c1 = (qinv * RatQ.v_power(1 - 2 * i)) / denom
    gamma = tuple(-4 if k < i else 0 for k in range(n))
    return CartanElement(n, {(0,) * n: c0, gamma: c1})


def H_cartan(rset, n: int) -> CartanElement:
    """Product of h_i over an index collection (empty product is 1)."""
    out = CartanElement.one(n)
    for i in rset:
        out = out * h_cartan(i, n)
    return out


# ----------------------------------------------------------------------------
# Twisted adjoint calculus for F = f_beta
# ----------------------------------------------------------------------------

def _beta_pairing_of_word(w, beta: int) -> int:
    """(alpha_beta, multidegree of w) computed letterwise."""
    return sum(cartan_entry(beta, letter) for letter in w)


def sigma_aut(x: NCPoly, beta: int) -> NCPoly:
    """Grading automorphism sigma = conjugation by K_beta: a word of
    multidegree nu (so of degree -nu in the lattice grading) is scaled by
    v**-(alpha_beta, nu)."""
    terms = {}
    for w, c in x.terms.items():
        s = _beta_pairing_of_word(w, beta)
        cc = RatQ.v_power(-s) * c
        if cc:
            terms[w] = cc
    return NCPoly._raw(x.n, terms)


def ad_F(x: NCPoly, beta: int) -> NCPoly:
    """The sigma-derivation ad_F(x) = F x - sigma(x) F with F = f_beta."""
    F = (beta,)
    terms: dict = {}
    for w, c in x.terms.items():
        left = F + w
        prev = terms.get(left)
        s = c if prev is None else prev + c
        if s:
            terms[left] = s
        elif prev is not None:
            del terms[left]
        right = w + F
        cc = RatQ.v_power(-_beta_pairing_of_word(w, beta)) * c
        prev = terms.get(right)
        s = -cc if prev is None else prev - cc
        if s:
            terms[right] = s
        elif prev is not None:
            del terms[right]
    return NCPoly._raw(x.n, terms)


def ad_F_pow(x: NCPoly, beta: int, n: int) -> NCPoly:
    if n < 0:
        raise ValueError("iterate count must be >= 0")
    out = x
    for _ in range(n):
        out = ad_F(out, beta)
    return out


def ad_F_nilpotency(x: NCPoly, beta: int, rs: RewriteSystem, hard_cap=None):
    """Smallest k with ad_F**k(x) = 0 in the quotient, together with the
    normal forms of the iterates ad_F**j(x) for j < k.

    Every generator other than F is killed by ad_F**2 and F-free elements
    are therefore annihilated by iterating at most (height + 1) times; the
    hard cap height + 2 flags non-nilpotent inputs (anything containing F
    itself) instead of looping.
    """
    if x.is_zero():
        return 0, []
    if hard_cap is None:
        hard_cap = sum(x.multidegree()) + 2
    iterates = []
    cur = rs.normal_form(x)
    k = 0
    while not cur.is_zero():
        iterates.append(cur)
        k += 1
        if k > hard_cap:
            raise NilpotencyCapExceeded(
                f"ad_F iterates of multidegree {x.multidegree()} did not "
                f"vanish within {hard_cap} steps"
            )
        cur = rs.normal_form(ad_F(cur, beta))
    return k, iterates


def leibniz_check(a: NCPoly, b: NCPoly, beta: int, n: int) -> bool:
    """Compare ad_F**n(a b) against the twisted binomial expansion
    sum_i v**(i(n-i)) [n choose i]_v sigma**i(ad_F**(n-i)(a)) ad_F**i(b),
    as an identity of free polynomials."""
    lhs = ad_F_pow(a * b, beta, n)
    rhs = NCPoly.zero(a.n)
    for i in range(n + 1):
        term = ad_F_pow(a, beta, n - i)
        for _ in range(i):
            term = sigma_aut(term, beta)
        term = term * ad_F_pow(b, beta, i)
        rhs = rhs + term.scale(RatQ.v_power(i * (n - i)) * qbinom(n, i))
    return lhs == rhs


def fell_u_expand(ell: int, u: NCPoly, beta: int) -> NCPoly:
    """The finite expansion of F**l * u for multidegree-homogeneous u:
    sum_i v**(-i(l-i)) [l choose i]_v v**(i(beta,nu)) ad_F**(l-i)(u) F**i,
    where (beta, nu) is the lattice pairing of alpha_beta with the degree
    of u (so for words in the lowering generators it is minus the pairing
    with the letter-count vector).  Valid identically in the free algebra."""
    if ell < 0:
        raise ValueError("power must be >= 0")
    if u.is_zero():
        return u
    pe = -pairing(alpha(beta, u.n), u.multidegree())
    F = (beta,)
    out = NCPoly.zero(u.n)
    for i in range(ell + 1):
        coeff = RatQ.v_power(-i * (ell - i) + i * pe) * qbinom(ell, i)
        term = ad_F_pow(u, beta, ell - i).rmul_word(F * i).scale(coeff)
        out = out + term
    return out


# ----------------------------------------------------------------------------
# Localized elements and the conjugation operators Psi_r
# ----------------------------------------------------------------------------

class LocElement:
    """Finite sum  sum_j X_j F**j  with X_j polynomials and j any integer;
    the bookkeeping form for conjugation-operator values before their
    F-tails are cleared.  F is the fixed generator f_beta."""

    __slots__ = ("n", "beta", "terms")

    def __init__(self, n: int, beta: int, terms=None):
        self.n = n
        self.beta = beta
        clean = {}
        if terms:
            for j, p in terms.items():
                if p and not p.is_zero():
                    clean[j] = p
        self.terms = clean

    @classmethod
    def from_poly(cls, p: NCPoly, beta: int) -> "LocElement":
        return cls(p.n, beta, {0: p})

    def __add__(self, other):
        if not isinstance(other, LocElement):
            return NotImplemented
        if self.beta != other.beta:
            raise ValueError("mismatched localization generators")
        terms = dict(self.terms)
        for j, p in other.terms.items():
            s = terms[j] + p if j in terms else p
            if s.is_zero():
                terms.pop(j, None)
            else:
                terms[j] = s
        return LocElement(self.n, self.beta, terms)

    def scale(self, c) -> "LocElement":
        return LocElement(self.n, self.beta, {j: p.scale(c) for j, p in self.terms.items()})

    def lmul_poly(self, x: NCPoly) -> "LocElement":
        return LocElement(self.n, self.beta, {j: x * p for j, p in self.terms.items()})

    def rmul_F_power(self, k: int) -> "LocElement":
        return LocElement(self.n, self.beta, {j + k: p for j, p in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def tail_depth(self) -> int:
        """How many inverse powers of F the representation carries."""
        return max(0, -min(self.terms, default=0))

    def cleared(self, rs: RewriteSystem):
        """Return (W, d) with this element equal to W * F**-d, W polynomial."""
        d = self.tail_depth()
        F = (self.beta,)
        out = None
        for j, p in self.terms.items():
            q = rs.normal_form(p.rmul_word(F * (j + d)))
            out = q if out is None else out + q
        if out is None:
            out = NCPoly.zero(self.n)
        return out, d

    def to_ncpoly(self, rs: RewriteSystem) -> NCPoly:
        """Resolve to an honest polynomial, dividing the cleared form by
        F**d on the right; raises NotRightDivisible if a negative power
        genuinely survives."""
        W, d = self.cleared(rs)
        if d == 0 or W.is_zero():
            return W
        return divide_right_F(W, d, self.beta, rs)

    def equals(self, other: "LocElement", rs: RewriteSystem) -> bool:
        diff = self + other.scale(RatQ.from_int(-1))
        W, _ = diff.cleared(rs)
        return W.is_zero()


def divide_right_F(W: NCPoly, d: int, beta: int, rs: RewriteSystem) -> NCPoly:
    """The unique theta with theta * F**d = W, when it exists.

    Uniqueness is automatic (the quotient is a domain); existence is decided
    by solving against the normal words of the quotient multidegree.
    """
    if W.is_zero():
        return W
    mu = list(W.multidegree())
    mu[beta - 1] -= d
    if mu[beta - 1] < 0:
        raise NotRightDivisible("multidegree lacks the required F letters")
    basis = rs.normal_words(tuple(mu))
    F = (beta,) * d
    cols = [rs._nf_word(b + F) for b in basis]
    res = solve_linear(cols, rs.normal_form(W).terms)
    if res[0] == "singular":
        raise SingularSystem("right-division basis became dependent")
    if res[0] == "inconsistent":
        raise NotRightDivisible("element keeps a negative F power")
    return NCPoly(W.n, {b: c for b, c in zip(basis, res[1])})


def psi(r, u: NCPoly, beta: int, rs: RewriteSystem, formal: bool = False) -> LocElement:
    """Conjugation operator Psi_r(u) = F**r u F**-r as a finite expansion
    sum_j v**(-j(r-j)) [r choose j]_v v**((r-j)(beta,nu)) ad_F**j(u) F**-j,
    truncated at the nilpotency index of ad_F on u.

    With formal=True the parameter enters only through t = v**r and the
    coefficients are Laurent polynomials in t over Q(q); substituting
    t -> v**r recovers the integer-r operator for every r.
    """
    if u.is_zero():
        return LocElement(u.n, beta, {})
    pe = -pairing(alpha(beta, u.n), u.multidegree())
    k, iterates = ad_F_nilpotency(u, beta, rs)
    terms = {}
    for j, uj in enumerate(iterates):
        if formal:
            scal = qbinom_formal(j) * WeightScalar.monomial(
                1, (pe - j,), RatQ.v_power(j * j - j * pe), "t"
            )
            poly = uj.map_scalars(lambda c, s=scal: s * c)
        else:
            coeff = RatQ.v_power(j * j - j * r + (r - j) * pe) * qbinom(r, j)
            poly = uj.scale(coeff)
        if not poly.is_zero():
            terms[-j] = poly
    return LocElement(u.n, beta, terms)


def psi_loc(r, loc: LocElement, beta: int, rs: RewriteSystem, formal: bool = False) -> LocElement:
    """Extend Psi_r over F-tails by Psi_r(F) = F: apply it to each
    polynomial part and keep the tail exponent."""
    out = LocElement(loc.n, beta, {})
    for j, p in loc.terms.items():
        out = out + psi(r, p, beta, rs, formal=formal).rmul_F_power(j)
    return out


def ws_t_rescale(s: WeightScalar, steps: int = 1) -> WeightScalar:
    """Reinterpret a Laurent polynomial in t = v**(r+steps) in terms of
    t = v**r: each monomial t**k picks up v**(k*steps)."""
    return WeightScalar(
        s.n,
        {e: c * RatQ.v_power(e[0] * steps) for e, c in s.terms.items()},
        s.prefix,
    )
