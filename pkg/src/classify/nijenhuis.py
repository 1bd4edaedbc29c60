"""
Nijenhuis tensor of the almost contact structure, from F and from brackets
"""
import logging
from typing import Dict, Optional, Tuple

from src.liealg import LieAlgebraSpec, Vector, bracket
from src.levicivita import Connection, nabla_eta, nabla_phi_vector
from src.structure import Mismatch, StructurePack, Tensor, TensorRole, first_mismatch

logger = logging.getLogger(__name__)


def nijenhuis(alg: LieAlgebraSpec, s: StructurePack, F: Tensor) -> Tensor:
    """N(x,y,z) = F(φx,y,z) - F(φy,x,z) - F(x,y,φz) + F(y,x,φz) + η(z)[F(x,φy,ξ) - F(y,φx,ξ)]"""
    def component(a, b, c):
        x, y, z = s.basis(a), s.basis(b), s.basis(c)
        phi_x, phi_y, phi_z = s.phi_vector(x), s.phi_vector(y), s.phi_vector(z)
        value = F.apply(phi_x, y, z) - F.apply(phi_y, x, z) - F.apply(x, y, phi_z) + F.apply(y, x, phi_z)
        if not s.eta[c].is_zero():
            value = value + s.eta[c] * (F.apply(x, phi_y, s.xi) - F.apply(y, phi_x, s.xi))
        return value

    return Tensor.from_function(s.space, alg.dim, 3, component, TensorRole.N)


def nijenhuis_vector(alg: LieAlgebraSpec, s: StructurePack, x: Vector, y: Vector) -> Vector:
    """[φ,φ](x,y) + dη(x,y)ξ with [φ,φ](x,y) = φ²[x,y] + [φx,φy] - φ[φx,y] - φ[x,φy]"""
    phi_x, phi_y = s.phi_vector(x), s.phi_vector(y)
    xy = bracket(alg, x, y)
    torsion = (s.phi_vector(s.phi_vector(xy)) + bracket(alg, phi_x, phi_y)
               - s.phi_vector(bracket(alg, phi_x, y)) - s.phi_vector(bracket(alg, x, phi_y)))
    return torsion + s.xi.scale(-s.eta_of(xy))


def nijenhuis_bracket(alg: LieAlgebraSpec, s: StructurePack) -> Tensor:
    """Bracket route for N, lowered with g"""
    n = alg.dim
    vectors = {}
    for a in range(n):
        for b in range(n):
            vectors[a, b] = nijenhuis_vector(alg, s, s.basis(a), s.basis(b))
    return Tensor.from_function(s.space, n, 3, lambda a, b, c: s.metric(vectors[a, b], s.basis(c)), TensorRole.N)


def nijenhuis_routes_mismatch(N_from_F: Tensor, N_from_brackets: Tensor) -> Optional[Mismatch]:
    difference = N_from_F.first_difference(N_from_brackets)
    return Mismatch(*difference) if difference else None


def nijenhuis_hv_split(N: Tensor, s: StructurePack) -> Tuple[Tensor, Tensor]:
    """(h_part, v_part) with v_part(x,y,z) = N(x,y,ξ)η(z)"""
    vertical = Tensor.from_function(
        s.space, s.dim, 3,
        lambda a, b, c: N.apply(s.basis(a), s.basis(b), s.xi) * s.eta[c],
    )
    return N - vertical, vertical


def nijenhuis_lemma_mismatches(alg: LieAlgebraSpec, s: StructurePack, conn: Connection,
                               N: Tensor) -> Dict[str, Optional[Mismatch]]:
    """Expressions of N, v(N) and h(N) through ∇φ and ∇η on F3⊕F7 inputs"""
    h_part, v_part = nijenhuis_hv_split(N, s)

    def full_form(a, b, c):
        x, y = s.basis(a), s.basis(b)
        vec = (nabla_phi_vector(s, conn, s.phi_vector(x), y).scale(2)
               - s.phi_vector(nabla_phi_vector(s, conn, x, y)).scale(2)
               + s.xi.scale(nabla_eta(s, conn, x, y) * 2))
        return s.metric(vec, s.basis(c))

    def vertical_form(a, b, c):
        return nabla_eta(s, conn, s.basis(a), s.basis(b)) * 4 * s.eta[c]

    def horizontal_form(a, b, c):
        x, y = s.basis(a), s.basis(b)
        vec = (s.phi_vector(s.phi_vector(nabla_phi_vector(s, conn, s.phi_vector(x), y))).scale(-2)
               - s.phi_vector(nabla_phi_vector(s, conn, x, y)).scale(2))
        return s.metric(vec, s.basis(c))

    n = alg.dim
    return {
        "N": first_mismatch(n, 3, lambda a, b, c: N.comps[a, b, c], full_form),
        "vN": first_mismatch(n, 3, lambda a, b, c: v_part.comps[a, b, c], vertical_form),
        "hN": first_mismatch(n, 3, lambda a, b, c: h_part.comps[a, b, c], horizontal_form),
    }
