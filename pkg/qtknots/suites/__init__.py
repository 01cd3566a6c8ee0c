"""
Verification suites for qtknots.

Each suite is registered under the name used by ``qtknots verify``.
"""

from .acceptance import (
    CrossCheckSuite, FamiliesSuite, Kostka4Suite, NablaEnSuite, NablaShatSuite, SmallMacHSuite, SuperpolySuite,
    Table1Suite, Table5Suite,
)
from .base_suite import CheckResult, VerificationSuite
from .conjectures import DkRelationScan, HookAgreementScan, IdentityDnlScan, SchurPositivityScan, SkewPositivityScan
from .properties import (
    ACandidatesSuite, CommutatorIdentitiesSuite, D0EigenSuite, HookEvaluationSuite, MacdonaldSpecializationsSuite,
    MacdonaldSymmetrySuite, NablaConjugationSuite, PiExpansionSuite, PlethysmRulesSuite, StarOrthogonalitySuite,
    StraighteningSuite, T0EvaluationSuite,
)

SUITES = {
    # properties
    "plethysm-rules": PlethysmRulesSuite,
    "hook-evaluation": HookEvaluationSuite,
    "macdonald-symmetry": MacdonaldSymmetrySuite,
    "macdonald-specializations": MacdonaldSpecializationsSuite,
    "star-orthogonality": StarOrthogonalitySuite,
    "d0-eigen": D0EigenSuite,
    "commutator-identities": CommutatorIdentitiesSuite,
    "nabla-conjugation": NablaConjugationSuite,
    "pi-expansion": PiExpansionSuite,
    "t0-evaluation": T0EvaluationSuite,
    "straightening": StraighteningSuite,
    "a-candidates": ACandidatesSuite,
    # acceptance
    "kostka4": Kostka4Suite,
    "small-macH": SmallMacHSuite,
    "nabla-en": NablaEnSuite,
    "nabla-shat": NablaShatSuite,
    "superpolys": SuperpolySuite,
    "families": FamiliesSuite,
    "table1": Table1Suite,
    "table5": Table5Suite,
    "crosscheck-n5": CrossCheckSuite,
    # reported scans
    "schur-positivity": SchurPositivityScan,
    "hook-agreement": HookAgreementScan,
    "skew-positivity": SkewPositivityScan,
    "identity-dnl": IdentityDnlScan,
    "dk-relation": DkRelationScan,
}


def available_suites():
    return list(SUITES)


def get_suite(name, **config):
    """
    Factory function to get a verification suite by name.

    Args:
        name: The name of the suite to get
        **config: Suite options, usually from load_suite_config()

    Returns:
        A VerificationSuite instance

    Raises:
        ValueError: If the suite name is not recognized
    """
    suite_class = SUITES.get(name)
    if suite_class is None:
        raise ValueError(f"Unknown suite name: {name}. Available suites: {', '.join(SUITES)}")
    return suite_class(**config)


__all__ = ["SUITES", "CheckResult", "VerificationSuite", "available_suites", "get_suite"]
