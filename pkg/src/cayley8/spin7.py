"""The canonical Cayley four-form on R^8 and everything built from it.

Contents: the four-form itself, the projectors onto the irreducible
two-, three-, and four-form components of its stabilizer action, the exact
matrices of the contraction maps on multivector fields, their inverses and
sections, the triple product, the Cayley (Hamiltonian) multivector solvers,
and the pointwise norm identities exposed through :func:`identity_report`.

Every derived matrix (projectors, contraction maps, kernels) is computed
once over exact rationals and cached immutably; after first use everything
is read-only and freely shareable between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .calculus import exterior_derivative, homotopy_primitive
from .linalg import ExactMatrix
from .multiindex import MultiIndex, basis, basis_position
from .polynomial import Polynomial, as_polynomial
from .tensor import (
    FORM,
    MULTIVECTOR,
    DegreeMismatch,
    GradedTensor,
    VarianceMismatch,
    contract,
    flat,
    hodge,
    inner,
    mv,
    sharp,
    vol,
    wedge,
)

#: Sorted-index coefficients of the Cayley four-form.  Fourteen unit terms;
#: the unsorted presentations common in the literature canonicalize to these.
_CAYLEY_COEFFS: dict[MultiIndex, int] = {
    (0, 1, 2, 3): +1,
    (0, 1, 6, 7): -1,
    (0, 2, 5, 7): +1,
    (0, 3, 5, 6): -1,
    (0, 1, 4, 5): +1,
    (0, 2, 4, 6): +1,
    (0, 3, 4, 7): +1,
    (4, 5, 6, 7): +1,
    (2, 3, 4, 5): -1,
    (1, 3, 4, 6): +1,
    (1, 2, 4, 7): -1,
    (2, 3, 6, 7): +1,
    (1, 3, 5, 7): +1,
    (1, 2, 5, 6): +1,
}

#: Pointwise constant in ``flat(Q) ^ (Q _| Psi) ^ Psi = c * |df|^2 vol`` for
#: Cayley three-multivector fields.  Fixed by the exact ratio oracle in the
#: test suite; under these conventions the exact value is 1 (the
#: alternative 7 fails calibration).
CAYLEY_FUNCTION_CONSTANT = Fraction(1)


class NotLocallyCayleyError(ValueError):
    """Raised when a potential is requested for a non-closed contraction."""

    def __init__(self, derivative: GradedTensor):
        self.derivative = derivative
        super().__init__(
            "multivector field is not locally Cayley; "
            f"d(Q _| Psi) has L1 coefficient mass {derivative.coeff_l1()}"
        )


@cache
def cayley_form() -> GradedTensor:
    """The canonical Cayley four-form (14 unit terms, self-dual, closed)."""
    return GradedTensor(FORM, 4, dict(_CAYLEY_COEFFS))


# -- operators on two- and three-forms --------------------------------------


def two_form_operator(beta: GradedTensor) -> GradedTensor:
    """T(beta) = star(Psi ^ beta) on two-forms; eigenvalues -3 and +1."""
    _expect(beta, FORM, 2)
    return hodge(wedge(cayley_form(), beta))


def three_form_operator(eta: GradedTensor) -> GradedTensor:
    """S(eta) = star(Psi ^ star(Psi ^ eta)) on three-forms; spectrum {-7, 0}."""
    _expect(eta, FORM, 3)
    psi = cayley_form()
    return hodge(wedge(psi, hodge(wedge(psi, eta))))


def _expect(t: GradedTensor, variance: str, degree: int) -> None:
    if t.variance != variance:
        raise VarianceMismatch(f"expected a {variance}, got a {t.variance}")
    if t.degree != degree and not t.is_zero():
        raise DegreeMismatch(f"expected degree {degree}, got {t.degree}")


# -- decomposition reports ---------------------------------------------------


@dataclass(frozen=True)
class DecompositionReport:
    """Named orthogonal components of a form under the Cayley splitting."""

    input: GradedTensor
    components: dict[str, GradedTensor]
    flattened_from_multivector: bool = False
    witnesses: dict[str, GradedTensor] = field(default_factory=dict)

    def residual(self) -> GradedTensor:
        total = GradedTensor.zero(FORM, self.input.degree)
        for part in self.components.values():
            total = total + part
        return self.input - total

    def norms(self) -> dict[str, Polynomial]:
        return {name: inner(part, part) for name, part in self.components.items()}

    def orthogonality_residuals(self) -> dict[str, Polynomial]:
        names = sorted(self.components)
        out: dict[str, Polynomial] = {}
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                out[f"{a}|{b}"] = inner(self.components[a], self.components[b])
        return out

    def defining_residuals(self) -> dict[str, "GradedTensor | Polynomial"]:
        """Exact residual of each component's defining equation(s)."""
        psi = cayley_form()
        out: dict[str, GradedTensor | Polynomial] = {}
        for name, part in self.components.items():
            if name == "2_7":
                out[name] = two_form_operator(part) + part * 3
            elif name == "2_21":
                out[name] = two_form_operator(part) - part
            elif name == "3_8":
                witness = self.witnesses["3_8_vector"]
                out[name] = part - contract(witness, psi)
            elif name == "3_48":
                out[name] = wedge(part, psi)
            elif name == "4_1":
                scale = inner(part, psi) * Fraction(1, 14)
                out[name] = part - psi * scale
            elif name == "4_7":
                out[name] = _seven_part_project(part) - part
                out["4_7_selfdual"] = hodge(part) - part
            elif name == "4_27":
                out["4_27_selfdual"] = hodge(part) - part
                out["4_27_wedge_psi"] = wedge(part, psi)
                # sum of squares, zero iff every pairing vanishes
                squares = Polynomial.zero()
                for gen in seven_part_generators():
                    pairing = inner(part, gen)
                    squares = squares + pairing * pairing
                out["4_27_wedge_7part"] = squares
            elif name == "4_35":
                out[name] = hodge(part) + part
            else:  # pragma: no cover - unknown labels never constructed
                raise KeyError(name)
        return out


def project2(beta: GradedTensor) -> DecompositionReport:
    """Split a two-form into its 7- and 21-dimensional components."""
    _expect(beta, FORM, 2)
    image = two_form_operator(beta)
    part7 = (beta - image) * Fraction(1, 4)
    part21 = (beta * 3 + image) * Fraction(1, 4)
    return DecompositionReport(beta, {"2_7": part7, "2_21": part21})


def project3(eta: GradedTensor) -> DecompositionReport:
    """Split a three-form into its 8- and 48-dimensional components."""
    _expect(eta, FORM, 3)
    psi = cayley_form()
    part8 = three_form_operator(eta) * Fraction(-1, 7)
    part48 = eta - part8
    # the 8-part is w _| Psi for the witness w below
    witness = sharp(hodge(wedge(psi, eta))) * Fraction(-1, 7)
    return DecompositionReport(
        eta, {"3_8": part8, "3_48": part48}, witnesses={"3_8_vector": witness}
    )


@cache
def seven_part_generators() -> tuple[GradedTensor, ...]:
    """The 28 four-forms v_flat ^ (w _| Psi) - w_flat ^ (v _| Psi)."""
    psi = cayley_form()
    gens = []
    for v, w in basis(2):
        gens.append(
            wedge(flat(mv(v)), contract(mv(w), psi))
            - wedge(flat(mv(w)), contract(mv(v), psi))
        )
    return tuple(gens)


@cache
def _seven_part_projector() -> ExactMatrix:
    """Orthogonal projector (70x70) onto the span of the 28 generators."""
    columns = [_form_vector(g, 4) for g in seven_part_generators()]
    g_matrix = ExactMatrix.from_columns(columns)
    _, pivots = g_matrix.rref()
    b = ExactMatrix.from_columns([columns[p] for p in pivots])
    bt = b.transpose()
    return b @ (bt @ b).inverse() @ bt


def _form_vector(t: GradedTensor, degree: int) -> list[Fraction]:
    """Constant-coefficient tensor as a rational coordinate vector."""
    out = [Fraction(0)] * len(basis(degree))
    for idx, poly in t.terms.items():
        out[basis_position(idx)] = poly.constant_value()
    return out


def _apply_matrix(matrix: ExactMatrix, t: GradedTensor, degree: int, variance: str) -> GradedTensor:
    """Apply a constant rational matrix to the coefficient vector of ``t``.

    Works for polynomial coefficients: the matrix acts componentwise on the
    polynomial coordinates.
    """
    coords: list[Polynomial] = [Polynomial.zero()] * matrix.ncols
    for idx, poly in t.terms.items():
        coords[basis_position(idx)] = poly
    keys = basis(degree)
    terms: dict[MultiIndex, Polynomial] = {}
    for i, row in enumerate(matrix.rows):
        acc = Polynomial.zero()
        for j, entry in enumerate(row):
            if entry and coords[j]:
                acc = acc + coords[j] * entry
        if not acc.is_zero():
            terms[keys[i]] = acc
    return GradedTensor._raw(variance, degree, terms)


def _seven_part_project(sigma: GradedTensor) -> GradedTensor:
    return _apply_matrix(_seven_part_projector(), sigma, 4, FORM)


def project4(sigma: GradedTensor) -> DecompositionReport:
    """Split a four-form into its 1-, 7-, 27-, and 35-dimensional components."""
    _expect(sigma, FORM, 4)
    psi = cayley_form()
    starred = hodge(sigma)
    part35 = (sigma - starred) * Fraction(1, 2)
    part1 = psi * (inner(sigma, psi) * Fraction(1, 14))
    part7 = _seven_part_project(sigma)
    part27 = sigma - part1 - part7 - part35
    return DecompositionReport(
        sigma, {"4_1": part1, "4_7": part7, "4_27": part27, "4_35": part35}
    )


def decompose(t: GradedTensor) -> DecompositionReport:
    """Decompose a degree 2, 3, or 4 tensor; multivectors are flattened first."""
    flattened = t.variance == MULTIVECTOR
    form = flat(t) if flattened else t
    if form.degree == 2:
        report = project2(form)
    elif form.degree == 3:
        report = project3(form)
    elif form.degree == 4:
        report = project4(form)
    else:
        raise DegreeMismatch(f"no decomposition for degree {form.degree}")
    if flattened:
        report = DecompositionReport(
            report.input, report.components, True, report.witnesses
        )
    return report


# -- contraction maps as exact matrices --------------------------------------


@cache
def map_matrix(k: int) -> ExactMatrix:
    """Matrix of Q -> Q _| Psi from degree-k multivectors to (4-k)-forms.

    Rows run over the lexicographic basis of (4-k)-forms, columns over the
    basis of k-multivectors; shapes 56x8, 28x28, 8x56 for k = 1, 2, 3.
    """
    if k not in (1, 2, 3):
        raise DegreeMismatch("contraction maps exist for degrees 1, 2, 3")
    psi = cayley_form()
    columns = []
    for idx in basis(k):
        image = contract(mv(*idx), psi)
        columns.append(_form_vector(image, 4 - k))
    return ExactMatrix.from_columns(columns)


@cache
def two_form_operator_matrix() -> ExactMatrix:
    """28x28 matrix of T(beta) = star(Psi ^ beta)."""
    columns = [
        _form_vector(two_form_operator(GradedTensor(FORM, 2, {idx: 1})), 2)
        for idx in basis(2)
    ]
    return ExactMatrix.from_columns(columns)


@cache
def three_form_operator_matrix() -> ExactMatrix:
    """56x56 matrix of S(eta) = star(Psi ^ star(Psi ^ eta))."""
    columns = [
        _form_vector(three_form_operator(GradedTensor(FORM, 3, {idx: 1})), 3)
        for idx in basis(3)
    ]
    return ExactMatrix.from_columns(columns)


def eigenspace_dimension(matrix: ExactMatrix, eigenvalue: Fraction | int) -> int:
    """Exact dimension of ker(matrix - eigenvalue I)."""
    n = matrix.nrows
    shifted = matrix - ExactMatrix.identity(n) * Fraction(eigenvalue)
    return shifted.nullity()


# -- inverses, sections, solvers ---------------------------------------------


def psi2_inverse(beta: GradedTensor) -> GradedTensor:
    """The unique two-multivector Q with Q _| Psi = beta.

    Built from the eigenspace split: Q = sharp(-1/3 beta_7 + beta_21).
    """
    report = project2(beta)
    return sharp(
        report.components["2_7"] * Fraction(-1, 3) + report.components["2_21"]
    )


def psi3_section(alpha: GradedTensor) -> GradedTensor:
    """A three-multivector Q with Q _| Psi = alpha (the canonical section).

    Q = -1/7 sharp(sharp(alpha) _| Psi); its flat lies in the 8-dimensional
    component, so this is the section with vanishing 48-part.
    """
    _expect(alpha, FORM, 1)
    return sharp(contract(sharp(alpha), cayley_form())) * Fraction(-1, 7)


def triple_product(q: GradedTensor) -> GradedTensor:
    """The vector field X(Q) = sharp(Q _| Psi) of a three-multivector.

    On decomposables u ^ v ^ w this is sharp(w _| v _| u _| Psi).
    """
    _expect(q, MULTIVECTOR, 3)
    return sharp(contract(q, cayley_form()))


def is_locally_cayley(q: GradedTensor) -> bool:
    """Whether d(Q _| Psi) = 0."""
    if q.variance != MULTIVECTOR or q.degree not in (1, 2, 3):
        raise VarianceMismatch("expected a multivector field of degree 1, 2, or 3")
    return exterior_derivative(contract(q, cayley_form())).is_zero()


def cayley_potential(q: GradedTensor) -> GradedTensor:
    """A form alpha with d(alpha) = Q _| Psi for locally Cayley Q.

    On R^8 closed means exact, so the cone-operator primitive always works;
    the potential is normalized by always returning that primitive.
    """
    if q.variance != MULTIVECTOR or q.degree not in (1, 2, 3):
        raise VarianceMismatch("expected a multivector field of degree 1, 2, or 3")
    image = contract(q, cayley_form())
    derivative = exterior_derivative(image)
    if not derivative.is_zero():
        raise NotLocallyCayleyError(derivative)
    return homotopy_primitive(image)


def cayley_2mvf_for(alpha: GradedTensor) -> GradedTensor:
    """The unique two-multivector field Q with Q _| Psi = d(alpha)."""
    _expect(alpha, FORM, 1)
    return psi2_inverse(exterior_derivative(alpha))


def cayley_3mvf_for(f: Polynomial, kernel_part: GradedTensor | None = None) -> GradedTensor:
    """A three-multivector field Q with Q _| Psi = df.

    Returns the canonical section (vanishing 48-part).  Any multivector
    whose contraction with the Cayley form vanishes may be added on top;
    pass it as ``kernel_part`` and it is validated then added verbatim.
    """
    f = as_polynomial(f)
    df = exterior_derivative(GradedTensor(FORM, 0, {(): f}))
    q = psi3_section(df)
    if kernel_part is not None:
        _expect(kernel_part, MULTIVECTOR, 3)
        if not contract(kernel_part, cayley_form()).is_zero():
            raise ValueError("kernel_part must contract to zero against the Cayley form")
        q = q + kernel_part
    return q


# -- named pointwise identities ----------------------------------------------


def identity_report(name: str, *inputs: GradedTensor) -> dict[str, GradedTensor | Polynomial]:
    """Evaluate both sides of a named pointwise identity exactly.

    Returns a dict of residuals (tensors or polynomials), all of which are
    zero when the identity holds.  Available names:

    ``seven_star``            (X _| Psi) ^ Psi = 7 star(flat(X)), X a vector field
    ``seven_norm``            flat(X) ^ (X _| Psi) ^ Psi = 7 |X|^2 vol
    ``decomposable_minus6``   ((u^v) _| Psi)^2 ^ Psi = -6 |flat(u)^flat(v)|^2 vol
    ``norm_split_minus27``    (Q _| Psi)^2 ^ Psi = (-27 |Q_7|^2 + |Q_21|^2) vol
    ``norm_split_three``      7 |Q_8|^2 = |Q|^2 and 7 |Q_48|^2 = 6 |Q|^2,
                              Q a decomposable three-multivector
    ``cayley_fn``             for Q _| Psi = df: the 48-part drops from
                              flat(Q) ^ (Q _| Psi) ^ Psi, and the eight-form
                              equals CAYLEY_FUNCTION_CONSTANT * |df|^2 vol
    """
    psi = cayley_form()
    volume = vol()
    if name == "seven_star":
        (x,) = inputs
        _expect(x, MULTIVECTOR, 1)
        lhs = wedge(contract(x, psi), psi)
        return {"residual": lhs - hodge(flat(x)) * 7}
    if name == "seven_norm":
        (x,) = inputs
        _expect(x, MULTIVECTOR, 1)
        lhs = wedge(flat(x), wedge(contract(x, psi), psi))
        return {"residual": lhs - volume * (inner(x, x) * 7)}
    if name == "decomposable_minus6":
        u, v = inputs
        q = wedge(u, v)
        image = contract(q, psi)
        lhs = wedge(image, wedge(image, psi))
        area = wedge(flat(u), flat(v))
        return {"residual": lhs + volume * (inner(area, area) * 6)}
    if name == "norm_split_minus27":
        (q,) = inputs
        _expect(q, MULTIVECTOR, 2)
        image = contract(q, psi)
        lhs = wedge(image, wedge(image, psi))
        report = project2(flat(q))
        n7 = inner(report.components["2_7"], report.components["2_7"])
        n21 = inner(report.components["2_21"], report.components["2_21"])
        return {"residual": lhs - volume * (n21 - n7 * 27)}
    if name == "norm_split_three":
        (q,) = inputs
        _expect(q, MULTIVECTOR, 3)
        report = project3(flat(q))
        total = inner(flat(q), flat(q))
        n8 = inner(report.components["3_8"], report.components["3_8"])
        n48 = inner(report.components["3_48"], report.components["3_48"])
        return {
            "eight_part": n8 * 7 - total,
            "large_part": n48 * 7 - total * 6,
        }
    if name == "cayley_fn":
        (q, df) = inputs
        _expect(q, MULTIVECTOR, 3)
        _expect(df, FORM, 1)
        image = contract(q, psi)
        report = project3(flat(q))
        lhs = wedge(flat(q), wedge(image, psi))
        eight_only = wedge(report.components["3_8"], wedge(image, psi))
        scaled = volume * (inner(df, df) * CAYLEY_FUNCTION_CONSTANT)
        return {
            "eight_part_eq": lhs - eight_only,
            "scalar": lhs - scaled,
            "image": image - df,
        }
    raise KeyError(f"unknown identity {name!r}")
