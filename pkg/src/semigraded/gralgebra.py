"""Finite-dimensional associative algebras over Q with a semigroup grading.

An algebra is given by sparse structure constants on a fixed basis plus
a degree map from basis indices into a finite semigroup.  All scalars
are Fractions; nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParam,
    GradingViolation,
    NotAssociative,
    SemigroupMismatch,
    UnknownName,
)
from .linalg import ONE, ZERO, Subspace, is_zero_vec, solve, unit_vec, vec
from .semigroup import (
    FiniteSemigroup,
    catalog_semigroup,
    make_semigroup,
    opposite_semigroup,
    trivial_semigroup,
)


@dataclass(frozen=True)
class GradedAlgebra:
    dim: int
    basis_labels: tuple
    structure: dict  # (i, j) -> {k: Fraction}, absent pairs multiply to zero
    degree: tuple    # basis index -> semigroup element index
    semigroup: FiniteSemigroup
    unit: tuple | None = None
    name: str = ""
    # for the catalog algebras whose basis elements are matrix-unit pairs:
    # basis index -> (i, j) of the underlying matrix unit, else None
    matrix_positions: tuple | None = None

    def __repr__(self):
        tag = self.name or "GradedAlgebra"
        return f"<{tag}: dim {self.dim} over {list(self.semigroup.labels)}>"

    # -- products ---------------------------------------------------------

    def mul_basis(self, i: int, j: int) -> dict:
        return self.structure.get((i, j), {})

    def multiply(self, u, v):
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                cell = self.structure.get((i, j))
                if cell:
                    ab = a * b
                    for k, c in cell.items():
                        out[k] += ab * c
        return tuple(out)

    def int_structure(self):
        """Structure constants as plain ints when every one is integral.

        Hot loops (long products of basis elements) run noticeably faster
        on ints than on Fractions.  Returns None if any constant is not
        an integer.
        """
        table = {}
        for (i, j), cell in self.structure.items():
            row = []
            for k, c in cell.items():
                if c.denominator != 1:
                    return None
                row.append((k, c.numerator))
            table[(i, j)] = tuple(row)
        return table

    def eval_table(self):
        """int_structure when available, else the same layout on Fractions."""
        table = self.int_structure()
        if table is None:
            table = {key: tuple(cell.items()) for key, cell in self.structure.items()}
        return table

    # -- grading ----------------------------------------------------------

    def degrees_present(self):
        return sorted(set(self.degree))

    def component_indices(self, t: int):
        return [i for i in range(self.dim) if self.degree[i] == t]

    def component(self, t: int) -> Subspace:
        return Subspace(self.dim, [unit_vec(self.dim, i) for i in self.component_indices(t)])

    def component_project(self, t: int, v):
        return tuple(x if self.degree[i] == t else ZERO for i, x in enumerate(v))

    def support(self):
        return sorted({self.degree[i] for i in range(self.dim)})

    def basis_vector(self, i: int):
        return unit_vec(self.dim, i)

    def full_subspace(self) -> Subspace:
        return Subspace.full(self.dim)


def validate(alg: GradedAlgebra):
    """Check associativity, the grading law and the declared unit.

    Returns a report dict {"ok": bool, "violations": [...]}; the catalog
    and the file parser insist on ok.
    """
    violations = []
    n = alg.dim
    for i in range(n):
        for j in range(n):
            ij = alg.multiply(alg.basis_vector(i), alg.basis_vector(j))
            # grading law on the pair (i, j)
            target = alg.semigroup.mul(alg.degree[i], alg.degree[j])
            for k, c in enumerate(ij):
                if c != 0 and alg.degree[k] != target:
                    violations.append(("grading", (i, j), k))
            for k in range(n):
                left = alg.multiply(ij, alg.basis_vector(k))
                jk = alg.multiply(alg.basis_vector(j), alg.basis_vector(k))
                right = alg.multiply(alg.basis_vector(i), jk)
                if left != right:
                    violations.append(("associativity", (i, j, k)))
    if alg.unit is not None:
        for i in range(n):
            e = alg.basis_vector(i)
            if alg.multiply(alg.unit, e) != e or alg.multiply(e, alg.unit) != e:
                violations.append(("unit", i))
    return {"ok": not violations, "violations": violations}


def validate_or_raise(alg: GradedAlgebra) -> GradedAlgebra:
    report = validate(alg)
    for v in report["violations"]:
        if v[0] == "associativity":
            raise NotAssociative(v[1])
        if v[0] == "grading":
            raise GradingViolation(v[1])
        raise GradingViolation(v[1], f"declared unit fails on basis {v[1]}")
    return alg


def find_unit(alg: GradedAlgebra):
    """The two-sided unit as a coordinate vector, or None.

    Solves u * e_i = e_i and e_i * u = e_i for all basis e_i.
    """
    n = alg.dim
    rows, rhs = [], []
    for i in range(n):
        # sum_j u_j (e_j e_i) = e_i  and  sum_j u_j (e_i e_j) = e_i
        for k in range(n):
            rows.append(tuple(alg.mul_basis(j, i).get(k, ZERO) for j in range(n)))
            rhs.append(ONE if k == i else ZERO)
            rows.append(tuple(alg.mul_basis(i, j).get(k, ZERO) for j in range(n)))
            rhs.append(ONE if k == i else ZERO)
    u = solve(rows, rhs)
    return u


def adjoin_unit(alg: GradedAlgebra) -> GradedAlgebra:
    """A + Q*1 with a fresh unit basis vector appended.

    The result is carried as an ungraded algebra (trivial semigroup):
    the adjoined unit has no meaningful degree, and the callers that
    need A+ never need its grading.
    """
    n = alg.dim
    structure = {}
    for (i, j), cell in alg.structure.items():
        structure[(i, j)] = dict(cell)
    for i in range(n + 1):
        structure[(i, n)] = {i: ONE}
        structure[(n, i)] = {i: ONE}
    structure[(n, n)] = {n: ONE}
    return GradedAlgebra(
        dim=n + 1,
        basis_labels=alg.basis_labels + ("1",),
        structure=structure,
        degree=(0,) * (n + 1),
        semigroup=trivial_semigroup(),
        unit=unit_vec(n + 1, n),
        name=(alg.name + "+") if alg.name else "",
    )


def with_trivial_grading(alg: GradedAlgebra) -> GradedAlgebra:
    return GradedAlgebra(
        dim=alg.dim,
        basis_labels=alg.basis_labels,
        structure=alg.structure,
        degree=(0,) * alg.dim,
        semigroup=trivial_semigroup(),
        unit=alg.unit,
        name=(alg.name + "|trivial") if alg.name else "",
        matrix_positions=alg.matrix_positions,
    )


# -- subspace arithmetic ---------------------------------------------------

def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def subspace_product(alg: GradedAlgebra, a: Subspace, b: Subspace) -> Subspace:
    prods = [alg.multiply(u, v) for u in a.rows for v in b.rows]
    return Subspace(alg.dim, [p for p in prods if not is_zero_vec(p)])


def contains(s: Subspace, v) -> bool:
    return s.contains(v)


def ideal_generated(alg: GradedAlgebra, vectors) -> Subspace:
    """Smallest two-sided ideal containing the vectors.

    Closure under one-sided multiplication by basis elements, run to a
    fixed point.  Note the generators themselves are included even when
    the algebra has no unit.
    """
    current = Subspace(alg.dim, [vec(v) for v in vectors])
    while True:
        new_rows = []
        for row in current.rows:
            for i in range(alg.dim):
                e = alg.basis_vector(i)
                for p in (alg.multiply(e, row), alg.multiply(row, e)):
                    if not current.contains(p):
                        new_rows.append(p)
        if not new_rows:
            return current
        current = current.sum(Subspace(alg.dim, new_rows))


def is_graded_subspace(alg: GradedAlgebra, s: Subspace) -> bool:
    total = 0
    for t in alg.support():
        total += s.intersect(alg.component(t)).dim
    return total == s.dim


def direct_sum(a: GradedAlgebra, b: GradedAlgebra) -> GradedAlgebra:
    if a.semigroup != b.semigroup:
        raise SemigroupMismatch("direct summands must share the grading semigroup")
    n = a.dim
    structure = {}
    for (i, j), cell in a.structure.items():
        structure[(i, j)] = dict(cell)
    for (i, j), cell in b.structure.items():
        structure[(i + n, j + n)] = {k + n: c for k, c in cell.items()}
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = tuple(a.unit) + tuple(b.unit)
    return GradedAlgebra(
        dim=n + b.dim,
        basis_labels=tuple(f"L:{l}" for l in a.basis_labels) + tuple(f"R:{l}" for l in b.basis_labels),
        structure=structure,
        degree=tuple(a.degree) + tuple(b.degree),
        semigroup=a.semigroup,
        unit=unit,
        name=f"{a.name}(+){b.name}" if a.name and b.name else "",
    )


def opposite(alg: GradedAlgebra) -> GradedAlgebra:
    structure = {}
    for (i, j), cell in alg.structure.items():
        structure[(j, i)] = dict(cell)
    return GradedAlgebra(
        dim=alg.dim,
        basis_labels=alg.basis_labels,
        structure=structure,
        degree=alg.degree,
        semigroup=opposite_semigroup(alg.semigroup),
        unit=alg.unit,
        name=(alg.name + ".op") if alg.name else "",
        matrix_positions=alg.matrix_positions,
    )


def quotient_algebra(alg: GradedAlgebra, ideal: Subspace, graded: bool):
    """The quotient A/I together with projection and lifting maps.

    Coset representatives are the standard basis vectors at the non-pivot
    coordinates of I's echelon basis; those are homogeneous, so when I is
    a graded ideal the quotient inherits the grading.  With graded=False
    the result carries the trivial grading.

    Returns (Q, project, lift) where project maps A-vectors to Q-coords
    and lift maps Q-coords back to representative A-vectors.
    """
    n = alg.dim
    pivot_set = set(ideal.pivots)
    reps = [c for c in range(n) if c not in pivot_set]
    qdim = len(reps)
    rep_pos = {c: k for k, c in enumerate(reps)}

    def project(v):
        reduced = ideal.reduce(v)
        return tuple(reduced[c] for c in reps)

    def lift(coords):
        v = [ZERO] * n
        for k, c in enumerate(reps):
            v[c] = coords[k]
        return tuple(v)

    structure = {}
    for a, i in enumerate(reps):
        for b, j in enumerate(reps):
            prod = alg.multiply(alg.basis_vector(i), alg.basis_vector(j))
            coords = project(prod)
            cell = {k: c for k, c in enumerate(coords) if c != 0}
            if cell:
                structure[(a, b)] = cell
    if graded:
        degree = tuple(alg.degree[c] for c in reps)
        semigroup = alg.semigroup
    else:
        degree = (0,) * qdim
        semigroup = trivial_semigroup()
    unit = project(alg.unit) if alg.unit is not None else None
    if unit is not None and is_zero_vec(unit):
        unit = None
    q = GradedAlgebra(
        dim=qdim,
        basis_labels=tuple(alg.basis_labels[c] for c in reps),
        structure=structure,
        degree=degree,
        semigroup=semigroup,
        unit=unit,
        name=(alg.name + "/I") if alg.name else "",
    )
    return q, project, lift


def homogeneous_basis(alg: GradedAlgebra, s: Subspace):
    """A basis of the graded subspace s with every vector homogeneous."""
    rows = []
    for t in alg.support():
        rows.extend(s.intersect(alg.component(t)).rows)
    if len(rows) != s.dim:
        raise GradingViolation(None, "subspace is not graded")
    return rows


def subalgebra_on(alg: GradedAlgebra, s: Subspace, graded: bool):
    """The subspace s as an algebra in its own right.

    s must be multiplicatively closed.  With graded=True the basis is
    chosen homogeneous so the grading restricts.  Returns (B, basis_rows)
    where basis_rows[i] is the A-vector realizing B's basis vector i.
    """
    rows = homogeneous_basis(alg, s) if graded else list(s.rows)
    m = len(rows)
    matrix_cols = list(zip(*rows)) if rows else []

    def coords_of(v):
        sol = solve([tuple(r) for r in matrix_cols], v)
        if sol is None:
            raise GradingViolation(None, "subspace is not multiplicatively closed")
        return sol

    structure = {}
    for i in range(m):
        for j in range(m):
            prod = alg.multiply(rows[i], rows[j])
            cell = {k: c for k, c in enumerate(coords_of(prod)) if c != 0}
            if cell:
                structure[(i, j)] = cell
    unit = None
    if alg.unit is not None and s.contains(alg.unit):
        unit = coords_of(alg.unit)
    if graded:
        degree = tuple(next(alg.degree[k] for k, c in enumerate(r) if c != 0) for r in rows)
        semigroup = alg.semigroup
    else:
        degree = (0,) * m
        semigroup = trivial_semigroup()
    b = GradedAlgebra(
        dim=m,
        basis_labels=tuple(f"b{i}" for i in range(m)),
        structure=structure,
        degree=degree,
        semigroup=semigroup,
        unit=unit,
        name=(alg.name + "|sub") if alg.name else "",
    )
    return b, rows


# -- catalog ----------------------------------------------------------------

def _matrix_unit_structure(k: int, positions):
    """Structure constants of span{e_pos : pos in positions} inside M_k.

    The position set must be multiplicatively closed (full and
    upper-triangular sets are).
    """
    index = {pos: idx for idx, pos in enumerate(positions)}
    structure = {}
    for (a, b), i in index.items():
        for (c, d), j in index.items():
            if b == c:
                structure[(i, j)] = {index[(a, d)]: ONE}
    return structure


def _full_matrix_positions(k):
    return [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]


def _upper_positions(k):
    return [(i, j) for i in range(1, k + 1) for j in range(i, k + 1)]


def full_matrix(k: int) -> GradedAlgebra:
    if k < 1:
        raise BadParam("k must be >= 1")
    positions = _full_matrix_positions(k)
    labels = tuple(f"e{i}{j}" for i, j in positions)
    unit = [ZERO] * len(positions)
    for idx, (i, j) in enumerate(positions):
        if i == j:
            unit[idx] = ONE
    return GradedAlgebra(
        dim=k * k,
        basis_labels=labels,
        structure=_matrix_unit_structure(k, positions),
        degree=(0,) * (k * k),
        semigroup=trivial_semigroup(),
        unit=tuple(unit),
        name=f"full_matrix({k})",
        matrix_positions=tuple(positions),
    )


def upper_triangular(k: int) -> GradedAlgebra:
    if k < 1:
        raise BadParam("k must be >= 1")
    positions = _upper_positions(k)
    labels = tuple(f"e{i}{j}" for i, j in positions)
    unit = [ONE if i == j else ZERO for i, j in positions]
    return GradedAlgebra(
        dim=len(positions),
        basis_labels=labels,
        structure=_matrix_unit_structure(k, positions),
        degree=(0,) * len(positions),
        semigroup=trivial_semigroup(),
        unit=tuple(unit),
        name=f"upper_triangular({k})",
        matrix_positions=tuple(positions),
    )


def _right_zero_band(k: int) -> FiniteSemigroup:
    labels = tuple(f"t{i}" for i in range(1, k + 1))
    table = tuple(tuple(j for j in range(k)) for _ in range(k))
    return make_semigroup(labels, table)


def mk_column_graded(k: int) -> GradedAlgebra:
    """M_k graded by the right zero band on k elements, column by column."""
    if k < 2:
        raise BadParam("k must be >= 2")
    base = full_matrix(k)
    degree = tuple(j - 1 for (_, j) in base.matrix_positions)
    return GradedAlgebra(
        dim=base.dim,
        basis_labels=base.basis_labels,
        structure=base.structure,
        degree=degree,
        semigroup=_right_zero_band(k),
        unit=base.unit,
        name=f"mk_column_graded({k})",
        matrix_positions=base.matrix_positions,
    )


def utk_column_graded(k: int) -> GradedAlgebra:
    if k < 2:
        raise BadParam("k must be >= 2")
    base = upper_triangular(k)
    degree = tuple(j - 1 for (_, j) in base.matrix_positions)
    return GradedAlgebra(
        dim=base.dim,
        basis_labels=base.basis_labels,
        structure=base.structure,
        degree=degree,
        semigroup=_right_zero_band(k),
        unit=base.unit,
        name=f"utk_column_graded({k})",
        matrix_positions=base.matrix_positions,
    )


def mk_zhalf_graded() -> GradedAlgebra:
    """M_2 graded by the order-2 group: diagonal in degree 0, antidiagonal
    in degree 1."""
    base = full_matrix(2)
    degree = tuple(0 if i == j else 1 for (i, j) in base.matrix_positions)
    return GradedAlgebra(
        dim=4,
        basis_labels=base.basis_labels,
        structure=base.structure,
        degree=degree,
        semigroup=catalog_semigroup("Z2"),
        unit=base.unit,
        name="mk_zhalf_graded",
        matrix_positions=base.matrix_positions,
    )


def _pair_algebra(k, second_positions, second_kind, semigroup, name, unital):
    """Common builder for the M_k (+) W examples.

    The basis is (e_ij, 0) for all matrix units, then (e_pq, w_pq) for pq
    in second_positions.  second_kind fixes how W multiplies:
      "ideal"       -- W an ideal with the matrix-unit product (w w' = ww')
      "square_zero" -- W an ideal with W^2 = 0
      "left_module" -- M_k acts on the left (a w = aw), W M_k = W^2 = 0
    """
    first = _full_matrix_positions(k)
    n1 = len(first)
    positions = first + list(second_positions)
    dim = len(positions)
    kinds = ["first"] * n1 + ["second"] * len(second_positions)
    idx_first = {pos: i for i, pos in enumerate(first)}
    idx_second = {pos: n1 + i for i, pos in enumerate(second_positions)}

    def pair_mul(i, j):
        """Product of basis i and basis j as {index: coeff}."""
        (a, b), (c, d) = positions[i], positions[j]
        out = {}
        # first coordinate always multiplies inside M_k
        if b == c:
            tgt = (a, d)
            ki, kj = kinds[i], kinds[j]
            if ki == "first" and kj == "second" and second_kind == "left_module":
                # (a, 0)(phi(w), w) = (a phi(w), a.w), a pair again
                out[idx_second[tgt]] = ONE
            elif ki == "second" and kj == "second" and second_kind == "ideal":
                # W multiplies like its copy inside M_k
                out[idx_second[tgt]] = ONE
            elif ki == "second" and kj == "second" and second_kind == "left_module":
                # (phi(v), v)(phi(w), w) = (phi(v) phi(w), phi(v).w)
                out[idx_second[tgt]] = ONE
            else:
                out[idx_first[tgt]] = ONE
        return out

    structure = {}
    for i in range(dim):
        for j in range(dim):
            cell = pair_mul(i, j)
            if cell:
                structure[(i, j)] = cell

    def label(i):
        (a, b) = positions[i]
        if kinds[i] == "first":
            return f"(e{a}{b},0)"
        return f"(e{a}{b},e{a}{b})"

    unit = None
    if unital:
        u = [ZERO] * dim
        for pos in first:
            if pos[0] == pos[1]:
                u[idx_first[pos]] += ONE
        for pos in second_positions:
            if pos[0] == pos[1]:
                u[idx_second[pos]] += ONE
                u[idx_first[pos]] -= ONE
        unit = tuple(u)

    return GradedAlgebra(
        dim=dim,
        basis_labels=tuple(label(i) for i in range(dim)),
        structure=structure,
        degree=(0,) * n1 + (1,) * len(second_positions),
        semigroup=semigroup,
        unit=unit,
        name=name,
        matrix_positions=tuple(positions),
    )


def example_t1(k: int) -> GradedAlgebra:
    """M_k (+) UT_k, both ideals, with the two-element semigroup T1:
    degree 0 carries (M_k, 0), degree 1 the diagonal copy of UT_k."""
    if k < 2:
        raise BadParam("k must be >= 2")
    return _pair_algebra(
        k, _upper_positions(k), "ideal", catalog_semigroup("T1"),
        f"exampleT1({k})", unital=True,
    )


def example_t2(k: int) -> GradedAlgebra:
    """M_k (+) V with V a square-zero ideal copying M_k as a space."""
    if k < 1:
        raise BadParam("k must be >= 1")
    return _pair_algebra(
        k, _full_matrix_positions(k), "square_zero", catalog_semigroup("T2"),
        f"exampleT2({k})", unital=False,
    )


def example_t3(k: int) -> GradedAlgebra:
    """M_k (+) V with V a square-zero left module copying M_k, graded by
    the right zero band of two elements."""
    if k < 1:
        raise BadParam("k must be >= 1")
    return _pair_algebra(
        k, _full_matrix_positions(k), "left_module", catalog_semigroup("T3"),
        f"exampleT3({k})", unital=False,
    )


def thm_t1_fractional() -> GradedAlgebra:
    """exampleT1 at k = 2: dimension 7, the smallest member of the family."""
    return _pair_algebra(
        2, _upper_positions(2), "ideal", catalog_semigroup("T1"),
        "thm_T1_fractional", unital=True,
    )


def thm_t2_fractional() -> GradedAlgebra:
    """M_2 (+) (F j11 + F j12 + F j22), the j's spanning a square-zero
    ideal, degree v carrying the pairs (e_pq, j_pq)."""
    return _pair_algebra(
        2, _upper_positions(2), "square_zero", catalog_semigroup("T2"),
        "thm_T2_fractional", unital=False,
    )


def thm_t3_fractional() -> GradedAlgebra:
    """M_2 (+) I with I the column module spanned by e12, e22 positions,
    I M_2 = I^2 = 0, graded by the right zero band."""
    return _pair_algebra(
        2, [(1, 2), (2, 2)], "left_module", catalog_semigroup("T3"),
        "thm_T3_fractional", unital=False,
    )


_CATALOG_BUILDERS = {
    "exampleT1": (example_t1, 1),
    "exampleT2": (example_t2, 1),
    "exampleT3": (example_t3, 1),
    "thm_T1_fractional": (thm_t1_fractional, 0),
    "thm_T2_fractional": (thm_t2_fractional, 0),
    "thm_T3_fractional": (thm_t3_fractional, 0),
    "mk_column_graded": (mk_column_graded, 1),
    "utk_column_graded": (utk_column_graded, 1),
    "mk_zhalf_graded": (mk_zhalf_graded, 0),
    "full_matrix": (full_matrix, 1),
    "upper_triangular": (upper_triangular, 1),
}


def catalog_names():
    return sorted(_CATALOG_BUILDERS)


def paper_catalog(name: str, *params) -> GradedAlgebra:
    if name not in _CATALOG_BUILDERS:
        raise UnknownName(f"unknown catalog algebra {name!r}")
    builder, arity = _CATALOG_BUILDERS[name]
    if len(params) != arity:
        raise BadParam(f"{name} takes {arity} parameter(s), got {len(params)}")
    for p in params:
        if not isinstance(p, int):
            raise BadParam(f"{name} parameters must be integers")
    alg = builder(*params)
    return validate_or_raise(alg)


def parse_catalog_spec(spec: str) -> GradedAlgebra:
    """Parse 'name' or 'name(3)' into a validated catalog algebra."""
    spec = spec.strip()
    if spec.startswith("catalog:"):
        spec = spec[len("catalog:"):]
    if "(" in spec:
        if not spec.endswith(")"):
            raise BadParam(f"malformed catalog spec {spec!r}")
        name, inner = spec[:-1].split("(", 1)
        params = tuple(int(x) for x in inner.split(",") if x.strip())
    else:
        name, params = spec, ()
    return paper_catalog(name, *params)
