"""Braided vector spaces over a set solution and their Nichols algebras.

A coefficient system attaches a nonzero scalar R[i][j] to every pair, giving
the braiding c(w_i (x) w_j) = R[i][j] w_{sigma_i(j)} (x) w_{tau_j(i)}.  The
hexagon identity on all triples is exactly the braid equation for c, and is
validated up front.

Graded dimensions come from the quantum symmetrizer recursion: the degree-k
image is the span of S_{k-1,1}(u (x) w_j) over a basis u of the previous
image and all generators w_j, where S_{k-1,1} is the staircase sum
id + c_{k-1} + c_{k-2} c_{k-1} + ... + c_1 ... c_{k-1}.  Each staircase term
is a single monomial operator, so one degree costs a handful of vectorized
permutation passes.  Degrees run exactly while the tensor space is small,
then two-prime modular with exact escalation on disagreement, on a vanishing
rank (a finiteness claim is only ever made with exact backing), or on an
oracle mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .exact import CycloElement, primes_for_order, specialize
from .linalg import (
    CycloCtx,
    ExactIntRows,
    ModRows,
    MonomialOperator,
    RowSpace,
    apply,
    mul_rows_elementwise,
)
from .orbits import partitions, psi
from .ybe import SetSolution, diagonal, full_decomposition, verify_solution


class HexagonViolation(ValueError):
    """The coefficient table fails the braid-equation constraint."""

    def __init__(self, witnesses):
        self.witnesses = tuple(witnesses)
        preview = ", ".join(str(w[0]) for w in self.witnesses[:5])
        more = "" if len(self.witnesses) <= 5 else f" (+{len(self.witnesses) - 5} more)"
        super().__init__(f"hexagon identity fails on triples {preview}{more}")


class CapExceeded(RuntimeError):
    """A configured size bound was hit."""


class HypothesesNotMet(ValueError):
    """The requested check needs hypotheses this system does not satisfy."""


class InhomogeneousElement(ValueError):
    """check_relation needs all words of one degree."""


_INT64_GUARD = 1 << 62


# ---------------------------------------------------------------------------
# coefficient systems


class CoefficientSystem:
    """A validated braiding table over a set solution.

    All entries share one cyclotomic order (the lcm of the entry orders,
    fixed here once so no coercion happens mid-elimination).
    """

    __slots__ = ("solution", "order", "R")

    def __init__(self, solution: SetSolution, order: int, R) -> None:
        object.__setattr__(self, "solution", solution)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "R", tuple(tuple(row) for row in R))

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientSystem is immutable")

    def entry(self, i: int, j: int) -> CycloElement:
        return self.R[i][j]

    @property
    def size(self) -> int:
        return self.solution.size

    def __eq__(self, other):
        if not isinstance(other, CoefficientSystem):
            return NotImplemented
        return (
            self.solution == other.solution
            and self.order == other.order
            and self.R == other.R
        )

    def __hash__(self):
        return hash((self.solution, self.order, self.R))

    def to_json(self) -> dict:
        return {
            "solution": self.solution.to_json(),
            "cyclotomic_order": self.order,
            "R": [[e.to_json() for e in row] for row in self.R],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoefficientSystem":
        solution = SetSolution.from_json(data["solution"])
        R = [[CycloElement.from_json(e) for e in row] for row in data["R"]]
        return validate_coefficients(solution, R)


def _common_order(entries) -> int:
    return reduce(math.lcm, (e.order for e in entries), 1)


def hexagon_failures(s: SetSolution, R) -> list:
    """All triples (i, j, k) where the two braid-equation products differ."""
    m = s.size
    failures = []
    for i in range(m):
        for j in range(m):
            tji = s.tau(j, i)
            sij = s.sigma(i, j)
            for k in range(m):
                lhs = R[i][j] * R[tji][k] * R[sij][s.sigma(tji, k)]
                sjk = s.sigma(j, k)
                rhs = R[j][k] * R[i][sjk] * R[s.tau(sjk, i)][s.tau(k, j)]
                if lhs != rhs:
                    failures.append(((i, j, k), lhs, rhs))
    return failures


def validate_coefficients(s: SetSolution, R) -> CoefficientSystem:
    """Coerce the table to a common cyclotomic order and validate it.

    Raises HexagonViolation carrying every failing triple; also rejects
    tables with zero entries and base solutions that are not non-degenerate
    Yang-Baxter solutions with bijective r.
    """
    m = s.size
    report = verify_solution(s)
    if not report.valid:
        raise ValueError("base table is not a non-degenerate Yang-Baxter solution")
    if len({s.r(i, j) for i in range(m) for j in range(m)}) != m * m:
        raise ValueError("r is not bijective on X x X")
    flat = []
    for row in R:
        for e in row:
            if not isinstance(e, CycloElement):
                e = CycloElement.from_rational(Fraction(e))
            if not e:
                raise ValueError("coefficient table entries must be nonzero")
            flat.append(e)
    if len(flat) != m * m:
        raise ValueError("coefficient table must be m x m")
    order = _common_order(flat)
    flat = [e.to_order(order) for e in flat]
    table = [flat[i * m : (i + 1) * m] for i in range(m)]
    failures = hexagon_failures(s, table)
    if failures:
        raise HexagonViolation(failures)
    return CoefficientSystem(s, order, table)


@dataclass(frozen=True)
class DiagonalCoefficientReport:
    """Outcome of the fixed-pair coefficient identity R[D(j)][j] = R[D(t)][t]
    along every tau-translate t = tau_k(j), plus whether those diagonal
    values are one constant q."""

    identity_holds: bool
    q_constant: bool
    q: CycloElement | None
    values: tuple


def diagonal_coefficient_check(cs: CoefficientSystem) -> DiagonalCoefficientReport:
    s = cs.solution
    D = diagonal(s)
    m = s.size
    values = tuple(cs.entry(D(j), j) for j in range(m))
    holds = True
    for j in range(m):
        for k in range(m):
            t = s.tau(k, j)
            if values[j] != values[t]:
                holds = False
    constant = all(v == values[0] for v in values)
    return DiagonalCoefficientReport(
        identity_holds=holds,
        q_constant=constant,
        q=values[0] if constant else None,
        values=values,
    )


def canonical_coefficients(
    s: SetSolution, q: CycloElement, theorem_mode: bool = False
) -> CoefficientSystem:
    """q on the fixed pairs of r, 1 everywhere else, then hexagon-validated.

    No general theorem guarantees this assignment is a braiding for every
    solution, so validation may raise HexagonViolation.  ``theorem_mode``
    additionally insists the finite-dimension hypotheses hold.
    """
    D = diagonal(s)
    m = s.size
    if not isinstance(q, CycloElement):
        q = CycloElement.from_rational(Fraction(q))
    one = CycloElement.one(q.order)
    R = [[one] * m for _ in range(m)]
    for j in range(m):
        R[D(j)][j] = q
    cs = validate_coefficients(s, R)
    if theorem_mode:
        hyp = theorem_hypotheses(cs)
        if not hyp.finite_type:
            raise HypothesesNotMet(
                "canonical system does not satisfy the finite-dimension hypotheses"
            )
    return cs


@dataclass(frozen=True)
class TheoremHypotheses:
    q_constant: bool
    q: CycloElement | None
    root_order: int | None  # n with q a primitive n-th root, else None
    pairing_holds: bool  # R[i][j] * R[sigma_i(j)][tau_j(i)] = 1 off fixed pairs

    @property
    def finite_type(self) -> bool:
        return (
            self.q_constant
            and self.pairing_holds
            and self.root_order is not None
            and self.root_order >= 2
        )

    @property
    def growth_type(self) -> bool:
        return self.q_constant and self.pairing_holds and self.root_order is None


def theorem_hypotheses(cs: CoefficientSystem) -> TheoremHypotheses:
    """Detect the dimension-theorem hypotheses (involutive base required)."""
    s = cs.solution
    D = diagonal(s)
    m = s.size
    diag = diagonal_coefficient_check(cs)
    one = CycloElement.one(cs.order)
    pairing = True
    for i in range(m):
        for j in range(m):
            if D(j) == i:
                continue
            a, b = s.r(i, j)
            if cs.entry(i, j) * cs.entry(a, b) != one:
                pairing = False
    root_order = diag.q.multiplicative_order() if diag.q_constant else None
    if root_order == 1:
        root_order = None  # q = 1 is outside both regimes
    return TheoremHypotheses(
        q_constant=diag.q_constant,
        q=diag.q,
        root_order=root_order,
        pairing_holds=pairing,
    )


# ---------------------------------------------------------------------------
# braiding operators (reference layer)


def braiding_ops(cs: CoefficientSystem, k: int) -> list[MonomialOperator]:
    """The operators c_1, ..., c_{k-1} on the degree-k tensor space, as
    monomial maps over CycloElements.  Index encoding is big-endian base m."""
    if k < 2:
        raise ValueError("need degree k >= 2")
    m = cs.size
    L = m ** k
    ops = []
    for i in range(1, k):
        d1 = m ** (k - i)
        d2 = m ** (k - i - 1)
        target = [0] * L
        scalar = [None] * L
        for b in range(L):
            p = b // d1 % m
            q = b // d2 % m
            a, c = cs.solution.r(p, q)
            target[b] = b + (a - p) * d1 + (c - q) * d2
            scalar[b] = cs.entry(p, q)
        ops.append(MonomialOperator(target, scalar))
    return ops


def symmetrizer_apply(cs: CoefficientSystem, v, k: int):
    """Apply the full degree-k quantum symmetrizer to a dense vector by the
    staircase recursion (k(k-1)/2 + k - 1 monomial passes, no k! blowup)."""
    if k == 0:
        return list(v)
    ops = braiding_ops(cs, k) if k >= 2 else []
    for j in range(2, k + 1):
        total = list(v)
        image = v
        for i in range(j - 1, 0, -1):
            image = apply(ops[i - 1], image)
            total = [a + b for a, b in zip(total, image)]
        v = total
    return list(v)


def word_index(word, m: int) -> int:
    code = 0
    for letter in word:
        code = code * m + letter
    return code


def relation_image(cs: CoefficientSystem, element) -> list:
    """The symmetrizer image of a formal sum of scaled words.

    ``element`` is an iterable of (coefficient, word) pairs, all words of one
    length; coefficients may be ints, Fractions or CycloElements.  The sum
    lies in the defining ideal exactly when the image vanishes.
    """
    terms = list(element)
    if not terms:
        return []
    degrees = {len(word) for _, word in terms}
    if len(degrees) != 1:
        raise InhomogeneousElement(f"mixed degrees {sorted(degrees)}")
    k = degrees.pop()
    m = cs.size
    order = cs.order
    coeffs = []
    for c, _ in terms:
        if not isinstance(c, CycloElement):
            c = CycloElement.from_rational(Fraction(c))
        order = math.lcm(order, c.order)
        coeffs.append(c)
    cs_work = cs
    if order != cs.order:
        cs_work = CoefficientSystem(
            cs.solution, order, [[e.to_order(order) for e in row] for row in cs.R]
        )
    zero = CycloElement.zero(order)
    vec = [zero] * (m ** k)
    for c, (_, word) in zip(coeffs, terms):
        idx = word_index(word, m)
        vec[idx] = vec[idx] + c.to_order(order)
    return symmetrizer_apply(cs_work, vec, k)


def check_relation(cs: CoefficientSystem, element) -> bool:
    """True iff the formal sum lies in the kernel of the symmetrizer."""
    return not any(relation_image(cs, element))


# ---------------------------------------------------------------------------
# fast symmetrizer chain


class _Engine:
    """Vectorized staircase terms and degree steps for one coefficient system."""

    def __init__(self, cs: CoefficientSystem) -> None:
        self.cs = cs
        self.m = cs.size
        self.ctx = CycloCtx(cs.order)
        m = self.m
        self.sig = np.array(
            [[cs.solution.sigma(p, q) for q in range(m)] for p in range(m)], dtype=np.int64
        )
        self.tq = np.array(
            [[cs.solution.tau(q, p) for q in range(m)] for p in range(m)], dtype=np.int64
        )
        flat = [cs.entry(i, j) for i in range(m) for j in range(m)]
        dens = [self.ctx.to_int_vec(e)[1] for e in flat]
        self.r_den = reduce(math.lcm, dens, 1)
        rint = np.zeros((m * m, self.ctx.phi), dtype=np.int64)
        for idx, e in enumerate(flat):
            vec, den = self.ctx.to_int_vec(e)
            rint[idx] = vec * (self.r_den // den)
        self.r_int = rint
        self.r_int_max = max(1, int(np.abs(rint).max()))
        self._r_mod: dict[int, np.ndarray] = {}
        self._flat = flat

    def r_mod(self, p: int) -> np.ndarray:
        if p not in self._r_mod:
            self._r_mod[p] = np.array(
                [specialize(e, p).value for e in self._flat], dtype=np.int64
            )
        return self._r_mod[p]

    def _c_arrays(self, k: int, i: int):
        """Permutation and scalar-index arrays of c_i on the degree-k basis."""
        m = self.m
        L = m ** k
        d1 = m ** (k - i)
        d2 = m ** (k - i - 1)
        idx = np.arange(L, dtype=np.int64)
        p = idx // d1 % m
        q = idx // d2 % m
        perm = idx + (self.sig[p, q] - p) * d1 + (self.tq[p, q] - q) * d2
        sidx = p * m + q
        return perm, sidx

    # -- exact chain

    def identity_rows(self) -> list[np.ndarray]:
        rows = []
        for j in range(self.m):
            arr = np.zeros((self.m, self.ctx.phi), dtype=np.int64)
            arr[j, 0] = 1
            rows.append(arr)
        return rows

    def _terms_exact(self, k: int, object_mode: bool):
        """Yield (perm, scalar array, denominator) for the staircase terms."""
        L = self.m ** k
        perm = np.arange(L, dtype=np.int64)
        dtype = object if object_mode else np.int64
        scal = np.zeros((L, self.ctx.phi), dtype=dtype)
        scal[:, 0] = 1
        den = 1
        yield perm, scal, den
        for i in range(k - 1, 0, -1):
            cperm, csidx = self._c_arrays(k, i)
            gathered = self.r_int[csidx[perm]].astype(dtype, copy=False)
            scal = mul_rows_elementwise(scal, gathered, self.ctx)
            perm = cperm[perm]
            den *= self.r_den
            yield perm, scal, den

    def exact_step(self, prev_rows: list, k: int):
        """One degree of the recursion: span of staircase images of
        (previous basis) (x) (generators).  Returns (basis rows, dim)."""
        m = self.m
        ctx = self.ctx
        L = m ** k
        object_mode = any(r.dtype == object for r in prev_rows)
        seeds = []
        for prev in prev_rows:
            for j in range(m):
                seed = np.zeros((L, ctx.phi), dtype=prev.dtype)
                seed[j::m] = prev
                seeds.append(seed)
        if not seeds:
            return [], 0
        accs = [np.zeros((L, ctx.phi), dtype=s.dtype) for s in seeds]
        total_den = self.r_den ** (k - 1)
        seed_max = max(_arr_max(s) for s in seeds)
        for perm, scal, den in self._terms_exact(k, object_mode):
            scale = total_den // den
            if not object_mode:
                bound = (
                    seed_max
                    * _arr_max(scal)
                    * ctx.phi
                    * ctx.struct_max
                    * scale
                    * (k + 1)
                )
                if bound >= _INT64_GUARD:
                    object_mode = True
                    seeds = [_obj(s) for s in seeds]
                    accs = [_obj(a) for a in accs]
                    scal = _obj(scal)
            for seed, acc in zip(seeds, accs):
                tmp = mul_rows_elementwise(seed, scal, ctx)
                if scale != 1:
                    tmp = tmp * scale
                acc[perm] += tmp
        rows = ExactIntRows(ctx, L)
        for acc in accs:
            rows.insert(acc)
        return rows.rows, rows.rank

    def specialize_rows(self, rows: list, p: int) -> list[np.ndarray]:
        """Mod-p images of exact basis rows (rows are primitive integers)."""
        from .exact import unity_root_mod

        omega = unity_root_mod(self.ctx.order, p)
        out = []
        for arr in rows:
            total = np.zeros(arr.shape[0], dtype=np.int64)
            w = 1
            for a in range(self.ctx.phi):
                col = arr[:, a]
                if arr.dtype == object:
                    col = np.array([int(v) % p for v in col], dtype=np.int64)
                else:
                    col = col % p
                total = (total + col * w) % p
                w = w * omega % p
            out.append(total)
        return out

    def _terms_mod(self, k: int, p: int):
        L = self.m ** k
        rmod = self.r_mod(p)
        perm = np.arange(L, dtype=np.int64)
        scal = np.ones(L, dtype=np.int64)
        yield perm, scal
        for i in range(k - 1, 0, -1):
            cperm, csidx = self._c_arrays(k, i)
            scal = scal * rmod[csidx[perm]] % p
            perm = cperm[perm]
            yield perm, scal

    def mod_step(self, prev_vecs: list, k: int, p: int):
        m = self.m
        L = m ** k
        seeds = []
        for prev in prev_vecs:
            for j in range(m):
                seed = np.zeros(L, dtype=np.int64)
                seed[j::m] = prev
                seeds.append(seed)
        if not seeds:
            return [], 0
        accs = [np.zeros(L, dtype=np.int64) for _ in seeds]
        for perm, scal in self._terms_mod(k, p):
            for seed, acc in zip(seeds, accs):
                tmp = seed * scal % p
                acc[perm] = (acc[perm] + tmp) % p
        rows = ModRows(p, L)
        for acc in accs:
            rows.insert(acc)
        return rows.rows, rows.rank


def _arr_max(arr) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max((abs(int(v)) for v in arr.reshape(-1)), default=0)
    return int(np.abs(arr).max())


def _obj(arr):
    if arr.dtype == object:
        return arr
    out = np.empty(arr.shape, dtype=object)
    flat_in = arr.reshape(-1)
    flat_out = out.reshape(-1)
    for i, v in enumerate(flat_in):
        flat_out[i] = int(v)
    return out


# ---------------------------------------------------------------------------
# graded dimensions


@dataclass(frozen=True)
class DegreeRecord:
    degree: int
    dim: int
    mode: str  # "trivial" | "exact" | "modular" | "modular+exact"
    primes: tuple = ()
    agreed: bool | None = None
    escalated: bool = False
    modular_dims: tuple = ()

    def to_json(self) -> dict:
        out = {"degree": self.degree, "dim": self.dim, "mode": self.mode}
        if self.primes:
            out["primes"] = list(self.primes)
            out["agreed"] = self.agreed
            out["modular_dims"] = list(self.modular_dims)
        if self.escalated:
            out["escalated"] = True
        return out


@dataclass(frozen=True)
class GradedDims:
    dims: tuple
    total: int | None
    provenance: tuple
    terminated: str  # "zero" | "cap"

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "total": self.total,
            "provenance": [r.to_json() for r in self.provenance],
            "terminated": self.terminated,
        }


def graded_dims(
    cs: CoefficientSystem,
    cap: int = 16,
    *,
    mode: str = "auto",
    exact_cap: int = 4096,
    primes=None,
    oracle=None,
    dimension_limit: int = 2 ** 22,
) -> GradedDims:
    """Per-degree dimensions until the first zero (all later degrees vanish
    since the algebra is generated in degree one) or until the cap.

    ``mode``: "auto" runs degrees with m^k <= exact_cap exactly, larger ones
    at two primes with escalation back to exact on disagreement, vanishing
    rank, or oracle mismatch; "exact" and "modular" force one path.
    ``oracle`` is an optional degree -> predicted-dimension callable used as
    an escalation tripwire in auto mode.
    """
    if mode not in ("auto", "exact", "modular"):
        raise ValueError(f"unknown mode {mode!r}")
    m = cs.size
    engine = _Engine(cs)
    dims = [1, m]
    records = [DegreeRecord(0, 1, "trivial"), DegreeRecord(1, m, "trivial")]
    exact_rows = engine.identity_rows()  # current exact basis (while in exact mode)
    exact_degree = 1
    mod_rows: dict[int, list] | None = None
    escalated_permanently = False
    terminated = "cap"

    k = 1
    while k < cap:
        k += 1
        L = m ** k
        if L > dimension_limit:
            terminated = "cap"
            break
        use_exact = (
            mode == "exact"
            or escalated_permanently
            or (mode == "auto" and L <= exact_cap)
        )
        if use_exact:
            exact_rows, dim = engine.exact_step(exact_rows, k)
            exact_degree = k
            dims.append(dim)
            records.append(DegreeRecord(k, dim, "exact"))
            if dim == 0:
                terminated = "zero"
                break
            continue
        if primes is None:
            primes = primes_for_order(cs.order, count=2)
        primes = tuple(primes)
        if mod_rows is None:
            mod_rows = {p: engine.specialize_rows(exact_rows, p) for p in primes}
        step_results = {p: engine.mod_step(mod_rows[p], k, p) for p in primes}
        mod_dims = tuple(step_results[p][1] for p in primes)
        agreed = len(set(mod_dims)) == 1
        suspicious = (
            not agreed
            or mod_dims[0] == 0
            or (oracle is not None and mod_dims[0] != oracle(k))
        )
        if mode == "modular" or not suspicious:
            dim = mod_dims[0]
            dims.append(dim)
            records.append(
                DegreeRecord(
                    k, dim, "modular", primes=primes, agreed=agreed, modular_dims=mod_dims
                )
            )
            for p in primes:
                mod_rows[p] = step_results[p][0]
            if dim == 0:
                # reachable only in forced-modular mode; auto escalates instead
                terminated = "zero"
                break
            continue
        # escalate: replay the exact chain through degree k (the cheap low
        # degrees rerun too; the expensive part is the tail either way)
        exact_rows = engine.identity_rows()
        recomputed = {}
        for degree in range(2, k + 1):
            exact_rows, dim_exact = engine.exact_step(exact_rows, degree)
            recomputed[degree] = dim_exact
        exact_degree = k
        escalated_permanently = True
        for degree in range(2, k):
            old = records[degree]
            if old.mode != "modular" and recomputed[degree] == dims[degree]:
                continue
            records[degree] = DegreeRecord(
                degree,
                recomputed[degree],
                "modular+exact" if old.mode == "modular" else "exact",
                primes=old.primes,
                agreed=old.agreed,
                escalated=recomputed[degree] != dims[degree],
                modular_dims=old.modular_dims,
            )
            dims[degree] = recomputed[degree]
        dim = recomputed[k]
        dims.append(dim)
        records.append(
            DegreeRecord(
                k,
                dim,
                "modular+exact",
                primes=primes,
                agreed=agreed,
                escalated=True,
                modular_dims=mod_dims,
            )
        )
        if dim == 0:
            terminated = "zero"
            break
    total = sum(dims) if terminated == "zero" else None
    return GradedDims(
        dims=tuple(dims),
        total=total,
        provenance=tuple(records),
        terminated=terminated,
    )


def symmetrizer_image(
    cs: CoefficientSystem,
    k: int,
    arithmetic: str = "exact",
    primes=None,
    exact_cap: int = 4096,
) -> RowSpace:
    """A reduced-echelon basis of the degree-k symmetrizer image.

    Exact arithmetic is bounded by ``exact_cap`` on the tensor dimension
    (CapExceeded beyond); modular arithmetic computes at the given primes
    (defaults to the two canonical ones) and materializes the first prime's
    basis after checking the ranks agree.
    """
    if k < 1:
        raise ValueError("degree must be >= 1")
    m = cs.size
    L = m ** k
    engine = _Engine(cs)
    if arithmetic == "exact":
        if L > exact_cap:
            raise CapExceeded(f"m^k = {L} exceeds exact cap {exact_cap}")
        rows = engine.identity_rows()
        for degree in range(2, k + 1):
            rows, _ = engine.exact_step(rows, degree)
        space = RowSpace(L)
        ctx = engine.ctx
        for arr in rows:
            space.insert([ctx.to_element(arr[i]) for i in range(L)])
        return space
    if arithmetic == "modular":
        if primes is None:
            primes = primes_for_order(cs.order, count=2)
        primes = tuple(primes)
        bases = {}
        for p in primes:
            vecs = engine.specialize_rows(engine.identity_rows(), p)
            for degree in range(2, k + 1):
                vecs, _ = engine.mod_step(vecs, degree, p)
            bases[p] = vecs
        ranks = {p: len(v) for p, v in bases.items()}
        if len(set(ranks.values())) != 1:
            raise ArithmeticError(f"modular ranks disagree: {ranks}")
        p0 = primes[0]
        space = RowSpace(L)
        from .exact import PrimeFieldElement

        for vec in bases[p0]:
            space.insert([PrimeFieldElement(int(v), p0) for v in vec])
        return space
    raise ValueError(f"unknown arithmetic {arithmetic!r}")


# ---------------------------------------------------------------------------
# combinatorial oracle and theorem checks


def predicted_dimension(m: int, n: int, k: int) -> int:
    """Sum of Perm(lambda) over partitions of k into at most m parts, each
    at most n-1: the predicted degree-k dimension under the finite-type
    hypotheses (orbits whose partition has a part >= n vanish)."""
    if k == 0:
        return 1
    return sum(part.perm_count(m) for part in partitions(k, m, n - 1))


def orbit_count_oracle(cs: CoefficientSystem, k: int) -> int:
    hyp = theorem_hypotheses(cs)
    if not hyp.finite_type:
        raise HypothesesNotMet("oracle needs constant q in G_n and unit pairing")
    return predicted_dimension(cs.size, hyp.root_order, k)


def theorem_relations(cs: CoefficientSystem) -> list:
    """The defining relations predicted for a finite-type system: quadratic
    straightening relations off the fixed pairs, plus one diagonal-power
    word per generator."""
    s = cs.solution
    D = diagonal(s)
    m = s.size
    hyp = theorem_hypotheses(cs)
    if hyp.root_order is None:
        raise HypothesesNotMet("relation schema needs q a root of unity")
    n = hyp.root_order
    one = CycloElement.one(cs.order)
    relations = []
    for i in range(m):
        for j in range(m):
            if D(j) == i:
                continue
            a, b = s.r(i, j)
            relations.append(
                (
                    f"w{i} w{j} - R w{a} w{b}",
                    [(one, (i, j)), (-cs.entry(i, j), (a, b))],
                )
            )
    for i in range(m):
        word = psi(n, i, s)
        label = " ".join(f"w{letter}" for letter in word)
        relations.append((label, [(one, word)]))
    return relations


def degree2_relation_rank(cs: CoefficientSystem, relations) -> int:
    """Rank of the span of the given degree-2 relations inside V (x) V."""
    m = cs.size
    zero = CycloElement.zero(cs.order)
    vectors = []
    for _, terms in relations:
        if any(len(word) != 2 for _, word in terms):
            continue
        vec = [zero] * (m * m)
        for coeff, word in terms:
            if not isinstance(coeff, CycloElement):
                coeff = CycloElement.from_rational(Fraction(coeff))
            idx = word_index(word, m)
            vec[idx] = vec[idx] + coeff.to_order(cs.order)
        vectors.append(vec)
    from .linalg import rank as _rank

    return _rank(vectors)


@dataclass(frozen=True)
class TheoremReport:
    mode: str  # "finite" | "growth" | "product"
    passed: bool
    checks: dict
    graded: GradedDims | None = None
    expected_total: int | None = None


def theorem_suite(
    cs: CoefficientSystem,
    *,
    cap: int = 16,
    growth_cap: int = 8,
    exact_cap: int = 4096,
    primes=None,
    dims_mode: str = "auto",
) -> TheoremReport:
    """Run the dimension checks the detected hypotheses call for.

    Constant q of multiplicative order n >= 2: total dimension must be n^m,
    every schema relation must vanish under the symmetrizer, and every
    computed degree must match the combinatorial oracle.  Constant q of
    infinite order: degree dimensions must follow the binomial profile
    C(k+m-1, m-1) up to ``growth_cap`` (the computable growth evidence).
    Non-constant q over a decomposable solution with per-part roots of
    unity: the total must be the product of the per-part totals.
    """
    hyp = theorem_hypotheses(cs)
    m = cs.size
    checks: dict = {}
    if not hyp.pairing_holds:
        raise HypothesesNotMet("pairing R[i][j] R[r(i,j)] = 1 fails off fixed pairs")
    if hyp.q_constant and hyp.root_order is not None:
        n = hyp.root_order
        oracle = lambda k: predicted_dimension(m, n, k)
        graded = graded_dims(
            cs, cap=cap, mode=dims_mode, exact_cap=exact_cap, primes=primes,
            oracle=oracle,
        )
        checks["total_is_n_to_m"] = graded.total == n ** m
        checks["oracle_matches"] = all(
            graded.dims[k] == oracle(k) for k in range(len(graded.dims))
        )
        checks["relations_vanish"] = all(
            check_relation(cs, terms) for _, terms in theorem_relations(cs)
        )
        passed = all(checks.values())
        return TheoremReport(
            mode="finite", passed=passed, checks=checks, graded=graded,
            expected_total=n ** m,
        )
    if hyp.q_constant and hyp.root_order is None:
        graded = graded_dims(
            cs, cap=growth_cap, mode="exact", exact_cap=max(exact_cap, m ** growth_cap)
        )
        expected = [math.comb(k + m - 1, m - 1) for k in range(len(graded.dims))]
        checks["binomial_growth"] = list(graded.dims) == expected
        passed = all(checks.values())
        return TheoremReport(mode="growth", passed=passed, checks=checks, graded=graded)
    # non-constant q: product formula over a full decomposition
    parts = full_decomposition(cs.solution)
    if len(parts) == 1:
        raise HypothesesNotMet("q is not constant and the solution is indecomposable")
    D = diagonal(cs.solution)
    expected_total = 1
    orders = []
    for part in parts:
        values = {cs.entry(D(i), i) for i in part}
        if len(values) != 1:
            raise HypothesesNotMet(f"q is not constant on part {part}")
        q_part = values.pop()
        n_part = q_part.multiplicative_order()
        if n_part is None or n_part < 2:
            raise HypothesesNotMet(f"q on part {part} is not in some G_n, n >= 2")
        orders.append(n_part)
        expected_total *= n_part ** len(part)
    graded = graded_dims(
        cs, cap=cap, mode=dims_mode, exact_cap=exact_cap, primes=primes
    )
    checks["total_is_product"] = graded.total == expected_total
    # the graded profile must factor as the convolution of the per-part
    # profiles (tensor factorization of the algebra as graded vector spaces)
    profile = [1]
    for part, n_part in zip(parts, orders):
        part_profile = [
            predicted_dimension(len(part), n_part, k)
            for k in range(len(part) * (n_part - 1) + 1)
        ]
        profile = _convolve(profile, part_profile)
    padded = list(graded.dims)
    checks["profile_factorizes"] = padded[: len(profile)] == profile and not any(
        padded[len(profile) :]
    )
    passed = all(checks.values())
    return TheoremReport(
        mode="product", passed=passed, checks=checks, graded=graded,
        expected_total=expected_total,
    )


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
