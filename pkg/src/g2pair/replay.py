"""Independent re-execution of rewrite derivations.

Nothing here calls normal_form.  Each recorded step is checked from its
own data: the difference after - before must be exactly one application
of the step's rule, meaning it removes a single atom of the rule's
symbol and adds the rule's right side at the same L-shift and
coefficient.  A certificate passes only if both chains replay, share
their starting class, and their recorded difference matches the actual
difference of the final forms.  Any tampering with a coefficient, a
rule, or an intermediate class is caught by exact integer arithmetic.
"""

from __future__ import annotations

from .errors import ReplayError
from .grothring import Derivation, IdentityCertificate, MotivicClass, Step


def check_step(step: Step) -> None:
    """Confirm after = before with one atom of the rule's symbol replaced."""
    rule = step.rule
    diff = step.after - step.before
    lhs_terms = {
        (s, p): c for (s, p), c in diff.terms().items() if s == rule.lhs
    }
    if len(lhs_terms) != 1:
        raise ReplayError(
            f"step must consume exactly one [{rule.lhs}] atom, "
            f"found {len(lhs_terms)} changed"
        )
    ((_, power), removed) = next(iter(lhs_terms.items()))
    coeff = -removed
    if coeff == 0:
        raise ReplayError(f"step removed nothing at [{rule.lhs}]")
    if step.before.coefficient(rule.lhs, power) != coeff:
        raise ReplayError(
            f"step coefficient {coeff} does not match the class before it"
        )
    expected = (rule.rhs - MotivicClass.atom(rule.lhs)).times_L(power).times_int(coeff)
    if diff != expected:
        raise ReplayError(
            f"step is not an application of {rule.name}: "
            f"difference {diff} != expected {expected}"
        )


def check_derivation(derivation: Derivation) -> MotivicClass:
    """Replay a chain; returns its final class."""
    cur = derivation.start
    for n, step in enumerate(derivation.steps):
        if step.before != cur:
            raise ReplayError(
                f"step {n} starts from {step.before}, chain is at {cur}"
            )
        check_step(step)
        cur = step.after
    return cur


def check_certificate(cert: IdentityCertificate) -> MotivicClass:
    """Replay both chains of a certificate; returns the certified difference."""
    left_final = check_derivation(cert.left)
    right_final = check_derivation(cert.right)
    if cert.left.start != cert.right.start:
        raise ReplayError(
            f"chains start from different classes: "
            f"{cert.left.start} vs {cert.right.start}"
        )
    actual = left_final - right_final
    if actual != cert.difference:
        raise ReplayError(
            f"recorded difference {cert.difference} != replayed {actual}"
        )
    return actual
