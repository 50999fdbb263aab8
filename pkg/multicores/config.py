import os
import logging
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

# Enumeration caps
DEFAULT_MAX_ITEMS = 10**6
DEFAULT_MAX_COUNT = 10**7
DEFAULT_SUBPARTITION_CAP = 10**6
DEFAULT_JOBS = 1

ENV_PREFIX = "MULTICORES_"


class Limits(BaseModel):
    """Caps and worker count shared by the CLI and the verification suites."""

    max_items: int = Field(DEFAULT_MAX_ITEMS, ge=1)
    max_count: int = Field(DEFAULT_MAX_COUNT, ge=1)
    jobs: int = Field(DEFAULT_JOBS, ge=1)

    @classmethod
    def from_env(cls, **overrides) -> "Limits":
        values = {}
        for field in cls.model_fields:
            raw = os.environ.get(f"{ENV_PREFIX}{field.upper()}")
            if raw is not None:
                logger.info(f"Limit {field} set from environment: {raw}")
                values[field] = int(raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class SuiteRanges(BaseModel):
    """Parameter ranges of the verification suites (defaults are the acceptance ranges)."""

    pair_sum_max: int = 16
    coarea_sum_max: int = 14
    box_kreweras: int = 5
    box_qdet: int = 4
    catalan_identity_max: int = 30
    hessenberg_max: int = 12
    popoviciu_max: int = 12
    symmetry_max_s: int = 25
    multi_catalan_max_s: int = 12
    multi_catalan_max_p: int = 4
    motzkin_max: int = 20
    gf_terms: int = 20
    gf_max_p: int = 3
    gd_max_n: int = 10
    gd_max_k: int = 4
    gd_power_max: int = 6
    gd_bijection_max_n: int = 8
    gd_bijection_max_k: int = 3
    conjecture_max_s: int = 10
    decomposition_max_s: int = 10
    decomposition_max_p: int = 3
