from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Prime field F_p used for every algebra unless a file or flag overrides it
    field_prime: int = 1009

    # Default seed for randomized procedures (TAULAB_SEED)
    seed: int = 0

    # Algebra construction: longest path tried before giving up, and a guard on enumeration
    max_path_length: int = 64
    max_paths: int = 20000

    # Length bound for projective resolutions / injective coresolutions
    max_resolution: int = 32

    # Isomorphism search: random trials, and Hom-space size (p^dim) below which search is exhaustive
    iso_trials: int = 64
    iso_exhaustive_limit: int = 2 ** 16

    # Fitting decomposition: random endomorphisms tried per piece
    decompose_trials: int = 128

    # Indecomposable enumeration cap for non-Nakayama algebras
    enumeration_limit: int = 200

    # Random direct sums per algebra in the reflexivity suite
    random_sums: int = 100

    # Threads used to verify several algebras at once
    workers: int = 1

    output_format: str = "text"
    log_level: str = "WARNING"

    # Check every constructed module against the multiplication table (test builds)
    validate_modules: bool = False

    @field_validator("field_prime")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        if value < 2 or value >= 2 ** 20 or any(value % d == 0 for d in range(2, int(value ** 0.5) + 1)):
            raise ValueError(f"field_prime must be a prime below 2^20, got {value}")
        return value

    @field_validator(
        "max_path_length", "max_paths", "max_resolution", "iso_trials",
        "decompose_trials", "enumeration_limit", "workers",
    )
    @classmethod
    def _check_bound(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"bounds must be >= 1, got {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        if value.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value.upper()

    @field_validator("output_format")
    @classmethod
    def _check_format(cls, value: str) -> str:
        if value not in ("text", "json"):
            raise ValueError(f"output_format must be 'text' or 'json', got {value!r}")
        return value

    class Config:
        env_file = ".env"
        env_prefix = "TAULAB_"
        validate_assignment = True


@lru_cache
def get_settings() -> Settings:
    return Settings()
