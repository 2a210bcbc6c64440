"""Shapovalov elements three ways, and their cross-validations.

For the highest root eta of sl(N+1) and a level m, a Shapovalov element is a
degree -m*eta element of the lower Borel whose evaluation at any weight lam
with (lam + rho, eta) = m turns the highest weight vector of the Verma module
M(lam) into a highest weight vector, normalized so that the coefficient of
the all-simple-root monomial is 1.  This module constructs such elements by

* ``theta_sum``    -- the closed-form sum over index sets: each chain f_J
                      weighted by the Cartan product H_J of the h_i whose
                      rows the chain skips;
* ``theta_det``    -- the left-to-right signed expansion of an
                      almost-triangular matrix with root-vector entries on
                      and above the diagonal and evaluated scalars -c_i on
                      the subdiagonal;
* ``theta_inductive`` -- the rank induction that conjugates the previous
                      rank's element by a power of the new simple generator,
                      realized through the finite conjugation operators;
* ``theta_power``  -- the level-m element as an ordered product of level-one
                      evaluations at shifted weights,

and provides the verification drivers for highest-weight behaviour and for
the determinant comparison identity that ties consecutive ranks together.
"""

from __future__ import annotations

from .freealg import NCPoly, RewriteSystem, get_rewrite_system
from .roots import alpha, dot_reflect, enumerate_II, eta_vec, pairing, r_of
from .scalars import R_ONE, RatQ, qint
from .uqsl import (
    H_cartan,
    expand_pbw,
    f_monomial_of_index_set,
    from_pbw,
    psi,
    to_pbw,
)
from .verma import (
    HighestWeight,
    VermaVector,
    act_e,
    cartan_eval,
    h_eval,
    vector_from_ncpoly,
)


class InductionPreconditionError(ValueError):
    """A rank-induction step saw a non-positive conjugation exponent."""


class WeightError(ValueError):
    """A weight failed a construction's precondition."""


# ----------------------------------------------------------------------------
# The closed sum form
# ----------------------------------------------------------------------------

class ShapoElement:
    """Level-one Shapovalov element as a sum of (PBW chain, Cartan part)
    pairs.  Each term also remembers which h_i indices make up its Cartan
    part, for rendering."""

    __slots__ = ("n", "m", "tag", "terms")

    def __init__(self, n, m, tag, terms):
        self.n = n
        self.m = m
        self.tag = tag
        # terms: list of (pbw tuple, h-index tuple, CartanElement)
        self.terms = sorted(terms, key=lambda t: t[0])

    def evaluate(self, hw: HighestWeight) -> dict:
        """Map PBW monomial -> scalar obtained by evaluating each Cartan
        part at the weight; vanishing coefficients are dropped."""
        out = {}
        for pbw, _, H in self.terms:
            c = cartan_eval(H, hw)
            if c:
                out[pbw] = c
        return out

    def pi0_monomial(self):
        return tuple((i, i + 1) for i in range(1, self.n + 1)) * self.m

    # -- rendering --------------------------------------------------------

    def to_text(self) -> str:
        parts = []
        for pbw, hs, _ in self.terms:
            fs = "".join(f"f[{i},{j}]" for (i, j) in pbw)
            if hs:
                fs += "\u00b7" + "".join(f"h{i}" for i in hs)
            parts.append(fs)
        return " + ".join(parts)

    def to_json_obj(self) -> dict:
        terms = []
        for pbw, hs, H in self.terms:
            terms.append(
                {
                    "pbw": [list(p) for p in pbw],
                    "h_factors": list(hs),
                    "h": {
                        ",".join(map(str, g)): str(c) for g, c in H.sorted_terms()
                    },
                }
            )
        return {"n": self.n, "m": self.m, "method": self.tag, "terms": terms}

    def to_latex(self) -> str:
        parts = []
        for pbw, hs, _ in self.terms:
            fs = "".join(f"f_{{{i},{j}}}" for (i, j) in pbw)
            fs += "".join(f"h_{{{i}}}" for i in hs)
            parts.append(fs if fs else "1")
        body = " + ".join(parts)
        return (
            "\\documentclass{article}\n\\begin{document}\n"
            f"\\[ {body} \\]\n\\end{{document}}\n"
        )


def theta_sum(n: int) -> ShapoElement:
    """The level-one element: the sum over all index sets of the chain f_J
    times the product of h_i over the skipped rows."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    terms = []
    for J in enumerate_II(n):
        rset = r_of(J, n)
        terms.append((f_monomial_of_index_set(J), rset, H_cartan(rset, n)))
    return ShapoElement(n, 1, "sum", terms)


def theta_vector(coords: dict, hw: HighestWeight, rs: RewriteSystem) -> VermaVector:
    """Apply an evaluated element (PBW coordinates) to the highest weight
    vector."""
    out = VermaVector(hw, {})
    for pbw in sorted(coords):
        c = coords[pbw]
        part = vector_from_ncpoly(expand_pbw(pbw, hw.n), hw, rs)
        out = out + part.scale(c)
    return out


# ----------------------------------------------------------------------------
# The ordered determinant form
# ----------------------------------------------------------------------------

class ShapoMatrix:
    """The almost-triangular matrix whose ordered determinant evaluates the
    element: entry (r, c) is the root-vector label (r, c+1) on and above the
    diagonal, the scalar marker -c_c on the subdiagonal, zero below."""

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be >= 1")
        self.n = n

    def entry(self, r: int, c: int):
        if not (1 <= r <= self.n and 1 <= c <= self.n):
            raise ValueError("matrix index out of range")
        if r <= c:
            return ("f", (r, c + 1))
        if r == c + 1:
            return ("c", c)
        return None


def theta_det(n: int, hw: HighestWeight) -> dict:
    """Complete left-to-right expansion of the almost-triangular matrix.

    Entries are taken column by column, each row used once; scalar
    subdiagonal entries -c_i = -h_i(lam) commute out front while the
    root-vector entries stay in column order.  Every surviving product of
    root vectors is asserted to be a consecutive chain, i.e. an f_J, and the
    expansion lands directly in PBW coordinates.
    """
    if hw.n < n:
        raise WeightError("weight has too few pairings for this rank")
    matrix = ShapoMatrix(n)
    cvals = [h_eval(i, hw) for i in range(1, n)]
    out: dict = {}

    def rec(col, used, perm, factors, scalar):
        if col > n:
            # permutation sign from inversion count
            inv = sum(
                1
                for a in range(len(perm))
                for b in range(a + 1, len(perm))
                if perm[a] > perm[b]
            )
            chain = tuple(factors)
            for k in range(len(chain) - 1):
                if chain[k][1] != chain[k + 1][0]:
                    raise AssertionError("determinant term is not a chain")
            coeff = scalar if inv % 2 == 0 else -scalar
            prev = out.get(chain)
            s = coeff if prev is None else prev + coeff
            if s:
                out[chain] = s
            elif prev is not None:
                del out[chain]
            return
        for row in range(1, n + 1):
            if used >> row & 1:
                continue
            entry = matrix.entry(row, col)
            if entry is None:
                continue
            kind, data = entry
            if kind == "f":
                factors.append(data)
                rec(col + 1, used | (1 << row), perm + [row], factors, scalar)
                factors.pop()
            else:
                rec(
                    col + 1,
                    used | (1 << row),
                    perm + [row],
                    factors,
                    -(scalar * cvals[data - 1]),
                )

    one = hw.one()
    rec(1, 0, [], [], one)
    return out


# ----------------------------------------------------------------------------
# The rank induction
# ----------------------------------------------------------------------------

class InductiveTheta:
    """Result of the rank induction at a numeric weight: raw PBW
    coordinates, the per-step conjugation exponents, and the leading
    coefficient with its predicted value."""

    __slots__ = ("n", "m", "target", "chain", "r_values", "coords", "pi0")

    def __init__(self, n, m, target, chain, r_values, coords, pi0):
        self.n = n
        self.m = m
        self.target = target
        self.chain = chain
        self.r_values = r_values
        self.coords = coords
        self.pi0 = pi0

    def predicted_pi0(self) -> RatQ:
        out = R_ONE
        for r in self.r_values:
            out = out * RatQ.v_power(self.m * (r + self.m))
        return out

    def normalized(self) -> dict:
        inv = self.pi0.inverse()
        return {M: c * inv for M, c in self.coords.items()}


def theta_inductive(
    n: int, m: int, lam, rs: RewriteSystem | None = None
) -> InductiveTheta:
    """Build the level-m element at a numeric weight by rank induction.

    Walking the flag of subalgebras generated by the first i simple roots,
    the element for rank i is Psi_r applied to F_i**m times the element for
    rank i-1, where r = (mu + rho, alpha_i) and mu is the dot-reflection of
    the current weight at alpha_i.  Every step requires r to be a positive
    integer; every step's conjugation-operator tail must clear, which is
    asserted by the right-division (a residue would mean the construction
    left the polynomial algebra).
    """
    if n < 1 or m < 1:
        raise ValueError("rank and level must be >= 1")
    lam = tuple(lam)
    if len(lam) != n:
        raise WeightError("weight has wrong rank")
    if rs is None:
        rs = get_rewrite_system(n)
    # chain of weights downward: chain[i] is the weight for rank i
    chain = {n: lam}
    for i in range(n, 1, -1):
        chain[i - 1] = dot_reflect(i, chain[i])
    r_values = []
    theta = NCPoly.word((1,) * m, n)
    for i in range(2, n + 1):
        r = chain[i - 1][i - 1] + 1
        if r < 1:
            raise InductionPreconditionError(
                f"step {i} needs a positive exponent, got {r}"
            )
        r_values.append(r)
        conj = psi(r, theta, i, rs)
        lifted = conj.lmul_poly(NCPoly.word((i,) * m, n))
        theta = lifted.to_ncpoly(rs)  # NotRightDivisible here = genuine bug
    coords = to_pbw(theta, rs)
    pi0_mono = tuple(
        sorted(((i, i + 1) for i in range(1, n + 1) for _ in range(m)))
    )
    pi0 = coords.get(pi0_mono)
    if pi0 is None:
        raise AssertionError("leading monomial missing from induction result")
    return InductiveTheta(n, m, lam, chain, r_values, coords, pi0)


# ----------------------------------------------------------------------------
# Powers
# ----------------------------------------------------------------------------

def theta_power(n: int, m: int, lam, rs: RewriteSystem | None = None) -> dict:
    """Level-m element at lam as the ordered product of level-one
    evaluations at lam - (m-1)eta, ..., lam - eta, lam (left to right)."""
    lam = tuple(lam)
    if len(lam) != n:
        raise WeightError("weight has wrong rank")
    if sum(lam) != m - n:
        raise WeightError(f"weight must satisfy (lam + rho, eta) = {m}")
    if rs is None:
        rs = get_rewrite_system(n)
    base = theta_sum(n)
    eta = eta_vec(n)
    eta_pair = [pairing(eta, alpha(k, n)) for k in range(1, n + 1)]
    prod = NCPoly.one(n)
    for j in range(m - 1, -1, -1):
        shifted = tuple(lam[k] - j * eta_pair[k] for k in range(n))
        coords = base.evaluate(HighestWeight.numeric(shifted))
        prod = prod * from_pbw(coords, n)
    return to_pbw(prod, rs)


# ----------------------------------------------------------------------------
# Verification drivers
# ----------------------------------------------------------------------------

def _witness(vec: VermaVector) -> str:
    if vec.is_zero():
        return "0"
    w, c = vec.sorted_terms()[0]
    ws = "*".join(f"f{i}" for i in w) if w else "v"
    return f"({c})*{ws}"


def verify_hwv(
    n: int,
    m: int = 1,
    mode: str = "symbolic",
    lam=None,
    samples: int = 5,
    seed: int = 0,
    rs: RewriteSystem | None = None,
) -> list[dict]:
    """Check that the constructed element produces highest weight vectors.

    Symbolic mode (level one): the raising checks for k < N are done with a
    fully unconstrained symbolic weight, and the k = N check after
    substituting the hyperplane constraint.  Sampled mode: numeric weights
    on the hyperplane (or the given lam), with the level-m element built as
    a power when m > 1.  Returns one report entry per check.
    """
    if rs is None:
        rs = get_rewrite_system(n)
    report = []
    if mode == "symbolic":
        if m != 1:
            raise ValueError("symbolic verification is level-one only")
        base = theta_sum(n)
        free = HighestWeight.symbolic(n)
        vec = theta_vector(base.evaluate(free), free, rs)
        for k in range(1, n):
            e = act_e(k, vec, rs)
            report.append(
                {
                    "check": f"e_{k} kills theta*v (symbolic, unconstrained)",
                    "status": "pass" if e.is_zero() else "fail",
                    "witness": _witness(e),
                }
            )
        tied = HighestWeight.symbolic(n, hyperplane_m=1)
        vec_tied = theta_vector(base.evaluate(tied), tied, rs)
        e = act_e(n, vec_tied, rs)
        report.append(
            {
                "check": f"e_{n} kills theta*v (symbolic, on hyperplane)",
                "status": "pass" if e.is_zero() else "fail",
                "witness": _witness(e),
            }
        )
        return report
    if mode != "sampled":
        raise ValueError("mode must be symbolic or sampled")
    from .roots import hyperplane_sample

    weights = [tuple(lam)] if lam is not None else hyperplane_sample(n, m, samples, seed)
    for w in weights:
        hw = HighestWeight.numeric(w)
        if m == 1:
            coords = theta_sum(n).evaluate(hw)
        else:
            coords = theta_power(n, m, w, rs)
        vec = theta_vector(coords, hw, rs)
        for k in range(1, n + 1):
            e = act_e(k, vec, rs)
            report.append(
                {
                    "check": f"e_{k} kills theta*v at lambda={','.join(map(str, w))}",
                    "status": "pass" if e.is_zero() else "fail",
                    "witness": _witness(e),
                }
            )
    return report


def compare_doot(
    n: int,
    p: int,
    mu=None,
    rs: RewriteSystem | None = None,
) -> dict:
    """The determinant comparison across consecutive ranks.

    With mu integral such that (mu + rho) pairs to 1 with the sub-rank
    highest root and to p >= 1 with alpha_N, and lam its dot-reflection at
    alpha_N, check F**(p+1) det(rank N-1 at mu) = v**(p+1) det(rank N at
    lam) F**p in the quotient, along with the subdiagonal scalar matches
    c_{N-1}(lam) = -1/q v**-p [p+1]_v and c_i(lam) = c_i(mu) for small i.
    """
    if n < 2 or p < 1:
        raise ValueError("needs rank >= 2 and p >= 1")
    if rs is None:
        rs = get_rewrite_system(n)
    if mu is None:
        # (mu + rho, alpha_i) = b_i with b_1 + .. + b_{N-1} = 1 and b_N = p
        b = [1] + [0] * (n - 2) + [p]
        mu = tuple(x - 1 for x in b)
    mu = tuple(mu)
    if sum(mu[: n - 1]) + (n - 1) != 1:
        raise WeightError("mu must pair to 1 with the sub-rank highest root")
    if mu[n - 1] + 1 != p:
        raise WeightError("mu must pair to p with the last simple root")
    lam = dot_reflect(n, mu)
    hw_mu = HighestWeight.numeric(mu[: n - 1])
    hw_lam = HighestWeight.numeric(lam)
    sub = theta_det(n - 1, hw_mu)
    full = theta_det(n, hw_lam)
    F = (n,)
    lhs = NCPoly.zero(n)
    for pbw, c in sub.items():
        lhs = lhs + expand_pbw(pbw, n).scale(c)
    lhs = lhs.lmul_word(F * (p + 1))
    rhs = NCPoly.zero(n)
    for pbw, c in full.items():
        rhs = rhs + expand_pbw(pbw, n).scale(c)
    rhs = rhs.rmul_word(F * p).scale(RatQ.v_power(p + 1))
    det_ok = rs.normal_form(lhs) == rs.normal_form(rhs)
    c_last = h_eval(n - 1, hw_lam)
    c_last_expect = -(RatQ.q_power(-1) * RatQ.v_power(-p)) * qint(p + 1)
    scalars_ok = c_last == c_last_expect and all(
        h_eval(i, hw_lam) == h_eval(i, HighestWeight.numeric(mu)) for i in range(1, n - 1)
    )
    return {
        "check": f"rank comparison n={n} p={p} at mu={','.join(map(str, mu))}",
        "status": "pass" if det_ok and scalars_ok else "fail",
        "witness": "0" if det_ok and scalars_ok else "determinant or scalar mismatch",
        "lambda": lam,
    }


def make_doot_weight(n: int, p: int, seed: int = 0, sample: int = 0):
    """A family of admissible mu for compare_doot: pairings (mu+rho, alpha_i)
    = b_i with b_1 + ... + b_{N-1} = 1 and b_N = p, varied by seed."""
    import random

    rng = random.Random(f"{seed}:{n}:{p}:{sample}")
    b = [rng.randint(-2, 2) for _ in range(n - 1)]
    b[0] += 1 - sum(b)
    b.append(p)
    return tuple(x - 1 for x in b)
