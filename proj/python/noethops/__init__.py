"""Local dual spaces and differential primary decomposition over QQ.

Thin python surface over the C++ core: polynomials, ideals, and operators
travel as strings in the same syntax the CLI uses; certificates as JSON.
"""

try:
    from noethops._core import (  # type: ignore[import-not-found]
        brute_membership,
        excess_dual,
        groebner_basis,
        membership,
        noetherian_certificate,
        normal_form,
        ortiz_component,
        quotient_dimension,
        truncated_dual,
    )
except ImportError:  # running against a build tree, module next to the package
    from _core import (  # type: ignore[import-not-found]
        brute_membership,
        excess_dual,
        groebner_basis,
        membership,
        noetherian_certificate,
        normal_form,
        ortiz_component,
        quotient_dimension,
        truncated_dual,
    )

__all__ = [
    "brute_membership",
    "excess_dual",
    "groebner_basis",
    "membership",
    "noetherian_certificate",
    "normal_form",
    "ortiz_component",
    "quotient_dimension",
    "truncated_dual",
]
