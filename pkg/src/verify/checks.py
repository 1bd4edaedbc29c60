"""
Registered checks; registration order is report order
"""
import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from src.classify import (
    ClassName,
    lie_class_conditions,
    nijenhuis_bracket,
    nijenhuis_hv_split,
    nijenhuis_lemma_mismatches,
    nijenhuis_routes_mismatch,
    two_f_formula_mismatch,
)
from src.curvature import (
    antisymmetry_mismatch,
    bianchi_mismatch,
    closed_T,
    closed_T_expression,
    closed_T_mismatch,
    dparallel_equivalences,
    einstein_constant_mismatch,
    f3_formula_suite,
    f7_formula_suite,
    kr_dt0_mismatch,
    krsT_equivalence,
    krt_mismatch,
    tdt_mismatch,
)
from src.fixtures import (
    FAMILY_D_TABLE,
    FAMILY_K_COMPONENTS,
    FAMILY_K_PAIRS,
    FAMILY_NABLA_TABLE,
    FAMILY_R_COMPONENTS,
    FAMILY_RHO_COMPONENTS,
    FAMILY_RHO_D_COMPONENTS,
    FAMILY_SCALARS,
    FAMILY_TORSION_SIGN_MISPRINTS,
    family_einstein_conditions,
    family_isotropic_equivalences,
    family_torsion_table,
    golden_scalar,
)
from src.ingestion import parse_combination
from src.levicivita import (
    Connection,
    deta_nabla_eta_mismatch,
    exterior_derivative,
    f_symmetry_mismatch,
    metric_compatibility_mismatch,
    torsion_free_mismatch,
)
from src.liealg import xi_central_check
from src.phikt import (
    corollary_mismatches,
    cyclic_N_mismatch,
    deta_torsion_mismatches,
    lemma_NT_mismatch,
    naturality_failure,
    naturality_mismatches,
    torsion_T7,
    torsion_T37_wedge,
    torsion_T37a,
    torsion_table_discrepancies,
)
from src.structure import Mismatch, Tensor, associated_pack, validate_structure
from src.verify.registry import (
    Outcome,
    dt_zero,
    einstein,
    family,
    in_class,
    non_abelian,
    register,
    symbolic_family,
    xi_killing,
)

logger = logging.getLogger(__name__)

F3 = in_class(ClassName.F3)
F7 = in_class(ClassName.F7)
F37 = in_class(ClassName.F3_PLUS_F7)

VALIDATION_CHECKS = ("jacobi", "structure", "associated_metric")


def _difference(computed: Tensor, expected: Tensor) -> Optional[Mismatch]:
    difference = computed.first_difference(expected)
    return Mismatch(*difference) if difference else None


def _vanishes(t: Tensor) -> Optional[Mismatch]:
    return _difference(t, Tensor.zeros(t.space, t.dim, t.valence))


def _truth(space, left: bool, right: bool) -> Optional[Mismatch]:
    return None if left == right else Mismatch((), space.const(int(left)), space.const(int(right)))


# -- input ------------------------------------------------------------------

@register("jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0")
def check_jacobi(p):
    result = p.jacobi
    if result.passed:
        return None
    return Mismatch(tuple(i - 1 for i in result.witness), result.residual, p.alg.params.zero())


@register("structure", "φξ = 0, φ² = -Id + η⊗ξ, η∘φ = 0, η(ξ) = 1, g(φx,φy) = -g(x,y) + η(x)η(y), η = g(·,ξ)")
def check_structure(p):
    report = p.validation
    if report.passed:
        return Outcome(None, "; ".join(report.notes))
    return Outcome(False, "; ".join(report.violations))


@register("associated_metric", "g̃(x,y) = g(x,φy) + η(x)η(y) gives an almost contact B-metric structure")
def check_associated_metric(p):
    report = validate_structure(p.alg, associated_pack(p.structure))
    return Outcome(report.passed, "; ".join(report.violations))


# -- Levi-Civita connection ---------------------------------------------------

@register("levi_civita_metric", "∇g = 0")
def check_levi_civita_metric(p):
    return metric_compatibility_mismatch(p.nabla, p.structure)


@register("levi_civita_torsion_free", "∇_xy - ∇_yx = [x,y]")
def check_levi_civita_torsion_free(p):
    return torsion_free_mismatch(p.alg, p.nabla)


@register("F_symmetries", "F(x,y,z) = F(x,z,y) = F(x,φy,φz) + η(y)F(x,ξ,z) + η(z)F(x,y,ξ)")
def check_f_symmetries(p):
    return f_symmetry_mismatch(p.structure, p.F)


@register("dd_eta", "d(dη) = 0")
def check_dd_eta(p):
    return _vanishes(exterior_derivative(p.alg, p.d_eta))


@register("nijenhuis_routes", "N from F equals [φ,φ] + dη⊗ξ lowered with g")
def check_nijenhuis_routes(p):
    return nijenhuis_routes_mismatch(p.N, nijenhuis_bracket(p.alg, p.structure))


@register("non_abelian_xi_central", "[ξ,x] = 0", non_abelian)
def check_xi_central(p):
    return xi_central_check(p.alg, p.structure)


@register("non_abelian_F_formula", "2F(X,Y,Z) = g([X,φY] - φ[X,Y], Z) + g([X,φZ] - φ[X,Z], Y)", non_abelian)
def check_non_abelian_f_formula(p):
    return two_f_formula_mismatch(p.alg, p.structure, p.F)


@register("lie_class_conditions", "η([X,Y]) = 0 ⟺ F3, φ[φX,Y] = φ²[X,Y] ⟺ F7, [X,Y] = -φ[φX,Y] ⟺ F0",
          non_abelian, F37)
def check_lie_class_conditions(p):
    conditions = lie_class_conditions(p.alg, p.structure)
    for name in (ClassName.F3, ClassName.F7, ClassName.F0):
        bracket_side = getattr(conditions, name.value)
        mismatch = _truth(p.structure.space, bracket_side, p.membership.member_of(name))
        if mismatch is not None:
            return Outcome(mismatch, f"{name.value}: bracket condition {bracket_side}")
    return None


@register("deta_nabla_eta", "dη(x,y) = 2(∇_xη)y", xi_killing)
def check_deta_nabla_eta(p):
    return deta_nabla_eta_mismatch(p.structure, p.nabla, p.d_eta)


@register("nijenhuis_lemma_N", "N(x,y) = 2(∇_{φx}φ)y - 2φ(∇_xφ)y + 2(∇_xη)y ξ", F37)
def check_nijenhuis_lemma_n(p):
    return nijenhuis_lemma_mismatches(p.alg, p.structure, p.nabla, p.N)["N"]


@register("nijenhuis_lemma_vN", "v(N(x,y)) = 4(∇_xη)y ξ", F37)
def check_nijenhuis_lemma_vn(p):
    return nijenhuis_lemma_mismatches(p.alg, p.structure, p.nabla, p.N)["vN"]


@register("nijenhuis_lemma_hN", "h(N(x,y)) = -2φ²(∇_{φx}φ)y - 2φ(∇_xφ)y", F37)
def check_nijenhuis_lemma_hn(p):
    return nijenhuis_lemma_mismatches(p.alg, p.structure, p.nabla, p.N)["hN"]


@register("nijenhuis_F3_vertical", "v(N) = 0 on F3", F3)
def check_nijenhuis_f3(p):
    return _vanishes(nijenhuis_hv_split(p.N, p.structure)[1])


@register("nijenhuis_F7_horizontal", "h(N) = 0 on F7", F7)
def check_nijenhuis_f7(p):
    return _vanishes(nijenhuis_hv_split(p.N, p.structure)[0])


# -- φKT-connection ---------------------------------------------------------

@register("torsion_wedge_form", "T = ½(η∧dη) + ¼𝔖N", F37)
def check_torsion_wedge_form(p):
    return _difference(torsion_T37_wedge(p.structure, p.N, p.d_eta, p.membership).total, p.T)


@register("torsion_T37a", "T(x,y) = ½{2(∇_xφ)φy - (∇_yφ)φx + (∇_{φy}φ)x + 3η(x)∇_yξ - 4η(y)∇_xξ + 2(∇_xη)y ξ}",
          F37)
def check_torsion_t37a(p):
    return _difference(torsion_T37a(p.structure, p.nabla, p.membership), p.T)


@register("torsion_T7", "T(x,y) = 2{η(x)∇_yξ - η(y)∇_xξ + (∇_xη)y ξ} on F7", F7)
def check_torsion_t7(p):
    return _difference(torsion_T7(p.structure, p.nabla, p.membership), p.T)


@register("phikt_naturality", "Dφ = Dξ = Dη = Dg = 0 and the torsion of D is T", F37)
def check_phikt_naturality(p):
    failure = naturality_failure(p.alg, p.structure, p.D, p.T)
    return Outcome(failure is None, failure or "")


@register("naturality_1a", "Q(x,y,φz) - Q(x,φy,z) = F(x,y,z) for Q = ½T", F37)
def check_naturality_1a(p):
    return naturality_mismatches(p.T.scaled(Fraction(1, 2)), p.F, p.structure)["1a"]


@register("naturality_1b", "Q(x,y,z) = -Q(x,z,y) for Q = ½T", F37)
def check_naturality_1b(p):
    return naturality_mismatches(p.T.scaled(Fraction(1, 2)), p.F, p.structure)["1b"]


@register("torsion_phi_second_slot", "T(x,φy) = φT(x,y) - 2(∇_xφ)y", F37)
def check_torsion_phi_second(p):
    return corollary_mismatches(p.T, p.nabla, p.structure)["T(x,phi y)"]


@register("torsion_phi_first_slot", "T(φx,y) = φT(x,y) + 2(∇_yφ)x", F37)
def check_torsion_phi_first(p):
    return corollary_mismatches(p.T, p.nabla, p.structure)["T(phi x,y)"]


@register("nijenhuis_torsion", "N(x,y,z) = T(x,y,z) + T(x,φy,φz) + T(φx,y,φz) - T(φx,φy,z)", F37)
def check_nijenhuis_torsion(p):
    return lemma_NT_mismatch(p.T, p.N, p.structure)


@register("cyclic_nijenhuis", "𝔖N = 3T + T(x,φy,φz) + T(φx,y,φz) + T(φx,φy,z)", F37)
def check_cyclic_nijenhuis(p):
    return cyclic_N_mismatch(p.T, p.N, p.structure)


@register("deta_nabla_eta_torsion", "dη(x,y) = 2(∇_xη)y", F37)
def check_deta_torsion_nabla(p):
    return deta_torsion_mismatches(p.T, p.d_eta, p.F, p.nabla, p.structure)["2 nabla eta"]


@register("deta_torsion_xi", "dη(x,y) = T(x,y,ξ)", F37)
def check_deta_torsion_xi(p):
    return deta_torsion_mismatches(p.T, p.d_eta, p.F, p.nabla, p.structure)["T(x,y,xi)"]


@register("deta_fundamental", "dη(x,y) = 2F(x,φy,ξ)", F37)
def check_deta_fundamental(p):
    return deta_torsion_mismatches(p.T, p.d_eta, p.F, p.nabla, p.structure)["2F(x,phi y,xi)"]


@register("torsion_table", "tabulated T(E1,E2,E5) = T(E3,E4,E5) = 2μ1, T(E2,E3,E5) = T(E4,E1,E5) = 2μ2",
          family, F37)
def check_torsion_table(p):
    tabulated = {index: value.substitute(p.assignment) for index, value in family_torsion_table().items()}
    discrepancies = torsion_table_discrepancies(p.T, tabulated)
    notes = [f"T{d.index}: tabulated {d.tabulated}, computed {d.computed} ({d.kind})" for d in discrepancies]
    wrong = [d for d in discrepancies if d.kind != "sign" or d.index not in FAMILY_TORSION_SIGN_MISPRINTS]
    if wrong:
        first = wrong[0]
        return Outcome(Mismatch(tuple(i - 1 for i in first.index), first.computed, first.tabulated), "; ".join(notes))
    return Outcome(None, "; ".join(notes))


# -- curvature ----------------------------------------------------------------

@register("R_antisymmetry", "R(x,y,z,w) = -R(y,x,z,w) = -R(x,y,w,z)")
def check_r_antisymmetry(p):
    return antisymmetry_mismatch(p.R)


@register("R_bianchi", "𝔖_{x,y,z} R(x,y,z,w) = 0")
def check_r_bianchi(p):
    return bianchi_mismatch(p.R)


@register("K_antisymmetry", "K(x,y,z,w) = -K(y,x,z,w) = -K(x,y,w,z)", F37)
def check_k_antisymmetry(p):
    return antisymmetry_mismatch(p.K)


@register("KRT", "K = R + ½(D_xT)(y,z,w) - ½(D_yT)(x,z,w) + ¼g(T(x,y),T(z,w)) + ¼𝔖g(T(x,y),T(z,w))", F37)
def check_krt(p):
    return krt_mismatch(p.R, p.K, p.DT, p.gTT)


@register("TDT", "τ^D = τ - ¼‖T‖²", F37)
def check_tdt(p):
    return tdt_mismatch(p.tau, p.tau_D, p.norm_T)


@register("KRsT_equivalence", "K φ-Kähler ⟺ K = R + ¼g(T(x,y),T(z,w)) - 1/12 𝔖g(T(x,y),T(z,w))", F37)
def check_krst_equivalence(p):
    return krsT_equivalence(p.R, p.K, p.gTT, p.structure)


@register("closed_T_expression", "dT = 𝔖(D_xT)(y,z,w) - (D_wT)(x,y,z) + 2𝔖g(T(x,y),T(z,w))", F37)
def check_closed_t_expression(p):
    return closed_T_mismatch(closed_T(p.alg, p.T), closed_T_expression(p.DT, p.gTT))


@register("dparallel_equivalences", "for DT = 0: dT = 0 ⟺ 𝔖g(T,T) = 0 ⟺ K φ-Kähler with K = R + ¼g(T,T)",
          F37, dt_zero)
def check_dparallel_equivalences(p):
    result = dparallel_equivalences(p.alg, p.DT, p.T, p.R, p.K, p.gTT, p.structure)
    note = (f"closed_T={result.closed_T}, closed_T_expression={result.closed_T_expression}, "
            f"sigma_TT_zero={result.sigma_TT_zero}, K_form3={result.K_form3}")
    return Outcome(result.consistent, note)


@register("KR_DT0", "K = R + ¼g(T(x,y),T(z,w)) + ¼𝔖g(T(x,y),T(z,w)) for DT = 0", F37, dt_zero)
def check_kr_dt0(p):
    return kr_dt0_mismatch(p.R, p.K, p.gTT)


@register("einstein_scalar_curvature", "ρ = c·g implies τ = dim·c", einstein)
def check_einstein_scalar_curvature(p):
    return einstein_constant_mismatch(p.tau, p.einstein, p.alg.dim)


@register("F7_formula_suite", "curvature identities on F7", F7)
def check_f7_suite(p):
    return f7_formula_suite(p.suite_inputs())


@register("F3_formula_suite", "curvature identities on F3", F3)
def check_f3_suite(p):
    return f3_formula_suite(p.suite_inputs())


# -- the five-dimensional family -------------------------------------------------

def _family_scalar(p, text: str):
    return golden_scalar(text).substitute(p.assignment)


def _connection_table(p, conn: Connection, table) -> Optional[Mismatch]:
    n = p.alg.dim
    for i in range(n):
        for j in range(n):
            text = table.get((i + 1, j + 1), "0")
            expected = parse_combination(text, p.structure.space, n, basis="E").substitute(p.assignment)
            actual = conn.along(i, j)
            for k in range(n):
                if actual[k] != expected[k]:
                    return Mismatch((i, j, k), actual[k], expected[k])
    return None


def _components(p, t: Tensor, table) -> Optional[Mismatch]:
    for index, text in table.items():
        zero_based = tuple(i - 1 for i in index)
        expected = _family_scalar(p, text)
        if t.comps[zero_based] != expected:
            return Mismatch(zero_based, t.comps[zero_based], expected)
    return None


def _outside_pairs(t: Tensor, pairs) -> Optional[Mismatch]:
    """First nonzero component whose index pairs are not both in pairs (1-based)"""
    allowed = {tuple(sorted(pair)) for pair in pairs}
    for index in np.ndindex(t.comps.shape):
        one_based = tuple(i + 1 for i in index)
        if tuple(sorted(one_based[:2])) in allowed and tuple(sorted(one_based[2:])) in allowed:
            continue
        if not t.comps[index].is_zero():
            return Mismatch(index, t.comps[index], t.space.zero())
    return None


@register("family_tables", "closed-form ∇, D, R, K, ρ, ρ^D, τ, τ^D, ‖∇φ‖², ‖T‖² and dT of the family", family, F37)
def check_family_tables(p):
    mismatch = (_connection_table(p, p.nabla, FAMILY_NABLA_TABLE)
                or _connection_table(p, p.D, FAMILY_D_TABLE)
                or _components(p, p.R, FAMILY_R_COMPONENTS)
                or _components(p, p.K, FAMILY_K_COMPONENTS)
                or _outside_pairs(p.K, FAMILY_K_PAIRS)
                or _components(p, p.rho, FAMILY_RHO_COMPONENTS)
                or _components(p, p.rho_D, FAMILY_RHO_D_COMPONENTS))
    if mismatch is not None:
        return mismatch
    computed = {
        "tau": p.tau,
        "tau_D": p.tau_D,
        "norm_nabla_phi": p.norm_nabla_phi,
        "norm_T": p.norm_T,
        "dT_1234": closed_T(p.alg, p.T).comps[0, 1, 2, 3],
    }
    for key, value in computed.items():
        expected = _family_scalar(p, FAMILY_SCALARS[key])
        if value != expected:
            return Outcome(Mismatch((), value, expected), key)
    return None


@register("family_isotropic_equivalences", "‖∇φ‖² = 0 ⟺ τ = τ^D ⟺ ∇_{E_i}ξ isotropic ⟺ μ1² = μ2²", family, F37)
def check_family_isotropic(p):
    values = family_isotropic_equivalences(p)
    return Outcome(len(set(values.values())) == 1, ", ".join(f"{k}={v}" for k, v in values.items()))


@register("family_einstein_conditions",
          "Einstein ⟺ μ1μ2 = -(λ1λ3 + λ2λ4) and μ1² - μ2² = -⅓(λ1² + λ2² - λ3² - λ4²)", symbolic_family)
def check_family_einstein(p):
    obstructions = p.einstein.obstructions
    expected = family_einstein_conditions()
    note = "obstructions: " + "; ".join(str(o) for o in obstructions)
    return Outcome(set(obstructions) == set(expected), note)
