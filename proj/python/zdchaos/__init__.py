# SPDX-License-Identifier: Apache-2.0
"""Python view of the zdchaos library."""

from ._zdchaos import (
    BudgetExceeded,
    DepthExceeded,
    ParseError,
    Tower,
    build,
    generators,
    validate_covering_text,
)

__all__ = [
    "BudgetExceeded",
    "DepthExceeded",
    "ParseError",
    "Tower",
    "build",
    "generators",
    "validate_covering_text",
]
