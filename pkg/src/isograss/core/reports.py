"""Serializable verdicts and reports (``iso-grass/report@1``, ``iso-grass/presentation@1``)."""

from enum import Enum
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

REPORT_FORMAT = "iso-grass/report@1"
PRESENTATION_FORMAT = "iso-grass/presentation@1"

Value = Optional[Union[int, str]]


class VerdictTag(str, Enum):
    ANY_DEGREE_POSSIBLE = "AnyDegreePossible"
    NO_OBSTRUCTION_DETECTED = "NoObstructionDetected"
    FORCED_ZERO = "ForcedZero"


class Reason(str, Enum):
    SPHERE_TARGET = "SphereTarget"
    IDENTICAL_SPACES = "IdenticalSpaces"
    H1_MISMATCH = "H1Mismatch"
    H4_MISMATCH = "H4Mismatch"
    HEIGHT_MISMATCH = "HeightMismatch"
    CASE_ANALYSIS = "CaseAnalysis"
    BETTI_MISMATCH = "BettiMismatch"
    NO_CRITERION_APPLIES = "NoCriterionApplies"


class _Report(BaseModel):
    model_config = ConfigDict(frozen=True)


class CriterionRecord(_Report):
    """One evaluated criterion with the values compared on both sides."""

    name: str
    source_value: Value = None
    target_value: Value = None
    fired: bool = False
    detail: str = ""


class Verdict(_Report):
    tag: VerdictTag
    reason: Reason
    trace: list[CriterionRecord] = Field(default_factory=list)

    @property
    def is_forced_zero(self) -> bool:
        return self.tag is VerdictTag.FORCED_ZERO

    @property
    def deciding(self) -> Optional[CriterionRecord]:
        fired = [record for record in self.trace if record.fired]
        return fired[-1] if fired else None

    def describe(self) -> str:
        """Short form such as ``ForcedZero HeightMismatch(1, 0)``."""
        record = self.deciding
        if record is None or self.tag is not VerdictTag.FORCED_ZERO:
            return f"{self.tag.value} {self.reason.value}"
        return f"{self.tag.value} {self.reason.value}({record.source_value}, {record.target_value})"


class PairRecord(_Report):
    source: str
    target: str
    dim: int
    verdict: VerdictTag
    reason: Reason
    reason_trace: list[CriterionRecord]


class EnumerationReport(_Report):
    format: Literal["iso-grass/report@1"] = REPORT_FORMAT
    family: str
    bound: int
    pairs: list[PairRecord]
    summary: dict[str, int]

    def undecided(self) -> list[PairRecord]:
        return [p for p in self.pairs if p.verdict is VerdictTag.NO_OBSTRUCTION_DETECTED]


class EqualHeightRecord(_Report):
    """A distinct equal-dimension isotropic pair whose p1 heights agree."""

    source: str
    target: str
    dim: int
    height: int
    bound_gap: int
    product: int
    divisible_by_four: bool
    bound_holds: bool


class Theorem41Report(_Report):
    bound: int
    pairs_scanned: int
    equal_height_pairs: list[EqualHeightRecord]
    counterexamples: list[EqualHeightRecord]
    identity_holds: bool
    small_difference_solutions: list[tuple[int, int]]
    k_plus_two_rejected: bool
    k_plus_one_even_rejected: bool
    passed: bool


class CaseFamilyReport(_Report):
    l: int
    k: int
    s_max: int
    first_values: tuple[int, int]
    lhs_greater: int
    dimension_identity_holds: bool
    heights_match_formula: bool
    covers_all_solutions: bool
    failures: list[int]
    passed: bool


class Theorem42Report(_Report):
    bound: int
    minimum: int
    argmin: tuple[int, int]
    all_above_four: bool
    monotone_in_n: bool
    passed: bool


class ParityReport(_Report):
    bound: int
    checked: int
    failures: list[str]
    passed: bool


class CrossCheckReport(_Report):
    name: str
    checked: int
    failures: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class VerifyReport(_Report):
    format: Literal["iso-grass/report@1"] = REPORT_FORMAT
    bound: int
    s_max: int
    ring_bound: int
    enumerations: list[EnumerationReport]
    theorem41: Theorem41Report
    case_families: list[CaseFamilyReport]
    theorem42: Theorem42Report
    parity: ParityReport
    cross_checks: list[CrossCheckReport]
    failures: list[str]
    passed: bool


class GeneratorEntry(_Report):
    name: str
    degree: int
    bundle: str


class SieveStepEntry(_Report):
    index: int
    differential: str
    reduction: str
    outcome: str
    survivor_degree: Optional[int] = None


class PresentationDocument(_Report):
    format: Literal["iso-grass/presentation@1"] = PRESENTATION_FORMAT
    space: str
    dimension: int
    generators: list[GeneratorEntry]
    relations: list[str]
    exterior_degrees: list[int]
    quotient_top_degree: int
    top_degree: int
    poincare: str
    palindromic: bool
    sieve: Optional[list[SieveStepEntry]] = None
    sieve_relations: Optional[list[str]] = None
    remark_exterior: Optional[list[int]] = None
    remark_agrees: Optional[bool] = None


class SpaceDocument(_Report):
    space: str
    normalized: str
    dimension: int
    h1_rank: int
    h4_rank: int
    h4_generator: Optional[str] = None
    orientable: bool
    sphere_equivalent: Optional[str] = None
    companion_orientable: Optional[bool] = None
    p1_height: Optional[int] = None


class PoincareDocument(_Report):
    space: str
    dimension: int
    poincare: str
    coefficients: list[int]
    top_degree: Optional[int]
    palindromic: bool
    total_rank: int
    euler: int


class SchubertDocument(_Report):
    space: str
    dimension: int
    rows: int
    width: int
    partitions: list[str]
    poincare: str
    euler: int
    sigma1_height: int


class HeightDocument(_Report):
    space: str
    element: str
    normal_form: str
    height: int
    formula: Optional[int] = None
    agree: Optional[bool] = None


class EvalDocument(_Report):
    space: str
    expression: str
    value: str
    normal_form: str
    is_zero: bool
    degrees: list[int]


class VerdictDocument(_Report):
    source: str
    target: str
    dimension: int
    verdict: Verdict
