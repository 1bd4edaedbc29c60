"""
Geometry pipeline orchestration
Coordinates all components: validation, connections, classification, torsion, curvature
"""
import logging
from functools import cached_property
from typing import Any, Dict, Mapping, Optional, Tuple

from tqdm import tqdm

from config.settings import settings
from src.classify import ClassMembership, ClassName, class_membership, nijenhuis
from src.curvature import (
    EinsteinResult,
    SuiteInputs,
    curvature_K_table,
    curvature_tensor,
    einstein_check,
    ricci,
    scalar_curv,
    torsion_derivative,
    torsion_gram,
)
from src.exact import Scalar
from src.exceptions import StructureValidationError
from src.fixtures import Fixture
from src.levicivita import (
    Connection,
    d_eta,
    fundamental_F,
    levi_civita,
    nabla_eta_tensor,
    square_norm_nabla_phi,
)
from src.liealg import JacobiResult, LieAlgebraSpec, jacobi_check
from src.phikt import build_D, norm_T, torsion_T37
from src.structure import StructurePack, Tensor, ValidationReport, validate_structure

logger = logging.getLogger(__name__)

FAMILY_FIXTURES = ("family", "fixc", "einstein", "f0")


class GeometryPipeline:
    """Every object derived from one Lie algebra with an almost contact B-metric structure.

    Objects are computed on first access and cached. Everything beyond the
    structure check requires a valid input; objects of the φKT-connection
    additionally require the class F3⊕F7.
    """

    def __init__(self, alg: LieAlgebraSpec, structure: StructurePack, name: str = "custom",
                 assignment: Optional[Mapping[str, Any]] = None):
        """Initialize the pipeline

        Args:
            alg: Lie algebra with exact structure constants
            structure: (φ, ξ, η, g) on the same basis
            name: label used in reports
            assignment: parameter values already substituted, if any
        """
        self.alg = alg
        self.structure = structure
        self.name = name
        self.assignment: Dict[str, Any] = dict(assignment or {})
        logger.info(f"Geometry pipeline '{name}' initialized (dim {alg.dim}, "
                    f"parameters {list(alg.params.names)})")

    @classmethod
    def from_fixture(cls, fixture: Fixture) -> "GeometryPipeline":
        return cls(fixture.alg, fixture.structure, fixture.name, fixture.assignment)

    @property
    def is_family(self) -> bool:
        """Whether the input is a member of the built-in five-dimensional family"""
        return self.name in FAMILY_FIXTURES

    @property
    def s(self) -> StructurePack:
        return self.structure

    def specialize(self, values: Mapping[str, Any]) -> "GeometryPipeline":
        """New pipeline with the parameters (partially) substituted"""
        assignment = {**self.assignment, **values}
        return GeometryPipeline(self.alg.substitute(values), self.structure.substitute(values),
                                self.name, assignment)

    # -- input checks ----------------------------------------------------

    @cached_property
    def jacobi(self) -> JacobiResult:
        return jacobi_check(self.alg)

    @cached_property
    def validation(self) -> ValidationReport:
        return validate_structure(self.alg, self.structure)

    def ensure_valid(self):
        """Raise unless the Jacobi identity and every structure relation hold

        Raises:
            StructureValidationError: listing the violated relations
        """
        violations = list(self.validation.violations)
        if not self.jacobi.passed:
            violations.insert(0, f"Jacobi identity fails at {self.jacobi.witness}")
        if violations:
            raise StructureValidationError(violations)

    # -- Levi-Civita side ---------------------------------------------------

    @cached_property
    def nabla(self) -> Connection:
        self.ensure_valid()
        return levi_civita(self.alg, self.structure)

    @cached_property
    def F(self) -> Tensor:
        return fundamental_F(self.alg, self.structure, self.nabla)

    @cached_property
    def membership(self) -> ClassMembership:
        return class_membership(self.F, self.structure, self.nabla)

    @cached_property
    def norm_nabla_phi(self) -> Scalar:
        return square_norm_nabla_phi(self.structure, self.nabla)

    @cached_property
    def nabla_eta(self) -> Tensor:
        return nabla_eta_tensor(self.structure, self.nabla)

    @cached_property
    def d_eta(self) -> Tensor:
        return d_eta(self.alg, self.structure)

    @cached_property
    def N(self) -> Tensor:
        return nijenhuis(self.alg, self.structure, self.F)

    @cached_property
    def R(self) -> Tensor:
        return curvature_tensor(self.alg, self.nabla, self.structure)

    @cached_property
    def rho(self) -> Tensor:
        return ricci(self.R, self.structure)

    @cached_property
    def tau(self) -> Scalar:
        return scalar_curv(self.rho, self.structure)

    @cached_property
    def einstein(self) -> EinsteinResult:
        return einstein_check(self.rho, self.structure)

    # -- φKT side (class F3⊕F7) -------------------------------------------

    def has_phikt(self) -> bool:
        return self.membership.member_of(ClassName.F3_PLUS_F7)

    @cached_property
    def T(self) -> Tensor:
        return torsion_T37(self.alg, self.structure, self.F, self.membership)

    @cached_property
    def D(self) -> Connection:
        return build_D(self.alg, self.structure, self.nabla, self.T)

    @cached_property
    def DT(self) -> Tensor:
        return torsion_derivative(self.D, self.T)

    @cached_property
    def K(self) -> Tensor:
        return curvature_K_table(self.alg, self.D, self.structure)

    @cached_property
    def rho_D(self) -> Tensor:
        return ricci(self.K, self.structure)

    @cached_property
    def tau_D(self) -> Scalar:
        return scalar_curv(self.rho_D, self.structure)

    @cached_property
    def gTT(self) -> Tensor:
        return torsion_gram(self.T, self.structure)

    @cached_property
    def norm_T(self) -> Scalar:
        return norm_T(self.T, self.structure)

    def suite_inputs(self) -> SuiteInputs:
        return SuiteInputs(
            s=self.structure, nabla=self.nabla, membership=self.membership, T=self.T,
            R=self.R, K=self.K, rho=self.rho, rho_D=self.rho_D, tau=self.tau, tau_D=self.tau_D,
            norm_phi=self.norm_nabla_phi, gTT=self.gTT, DT=self.DT,
            nabla_eta=self.nabla_eta, d_eta=self.d_eta,
        )

    # -- orchestration ------------------------------------------------------

    def prepare(self, show_progress: Optional[bool] = None) -> bool:
        """Compute every object in dependency order

        Args:
            show_progress: tqdm bar over the steps (default from settings)

        Returns:
            True if the φKT-connection objects were computed as well
        """
        show_progress = settings.SHOW_PROGRESS if show_progress is None else show_progress
        logger.info(f"Preparing geometry pipeline '{self.name}'...")

        logger.info("Step 1: Validating structure and Jacobi identity...")
        self.ensure_valid()

        steps: Tuple[Tuple[str, Tuple[str, ...]], ...] = (
            ("Step 2: Computing Levi-Civita connection...", ("nabla",)),
            ("Step 3: Computing F, class membership and Nijenhuis tensor...",
             ("F", "membership", "norm_nabla_phi", "nabla_eta", "d_eta", "N")),
            ("Step 4: Computing curvature of the Levi-Civita connection...", ("R", "rho", "tau", "einstein")),
        )
        phikt_steps = (
            ("Step 5: Computing torsion and φKT-connection...", ("T", "D", "gTT", "norm_T")),
            ("Step 6: Computing curvature of the φKT-connection...", ("DT", "K", "rho_D", "tau_D")),
        )
        for message, attributes in tqdm(steps, desc="Preparing", disable=not show_progress):
            logger.info(message)
            for attribute in attributes:
                getattr(self, attribute)

        if not self.has_phikt():
            logger.warning("Structure is not in F3⊕F7; φKT-connection objects skipped")
            return False
        for message, attributes in tqdm(phikt_steps, desc="Preparing φKT", disable=not show_progress):
            logger.info(message)
            for attribute in attributes:
                getattr(self, attribute)
        logger.info("Geometry pipeline prepared")
        return True

    def get_stats(self) -> Dict[str, Any]:
        """Summary of the computed invariants"""
        stats: Dict[str, Any] = {
            "name": self.name,
            "dim": self.alg.dim,
            "parameters": list(self.alg.params.names),
            "assignment": {k: str(v) for k, v in self.assignment.items()},
            "membership": self.membership.model_dump(),
            "norm_nabla_phi": str(self.norm_nabla_phi),
            "tau": str(self.tau),
            "einstein": self.einstein.passed,
        }
        if self.has_phikt():
            stats.update({"tau_D": str(self.tau_D), "norm_T": str(self.norm_T), "DT_zero": self.DT.is_zero()})
        return stats
