"""Configuration management for hyperdepth."""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, field_validator

from .errors import UnsupportedField

DEFAULT_PRIME = 32003
CONFIG_FILENAME = ".hyperdepth.json"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec(BaseModel, frozen=True):
    """Coefficient field for homology ranks: the rationals or GF(p)."""

    characteristic: int = 0

    @classmethod
    def parse(cls, descriptor: str) -> "FieldSpec":
        """Parse ``q`` or ``p:<prime>``."""
        text = descriptor.strip().lower()
        if text in ("q", "qq", "0"):
            return cls(characteristic=0)
        if text.startswith("p:"):
            try:
                p = int(text[2:])
            except ValueError:
                raise UnsupportedField(f"Not a prime field descriptor: {descriptor!r}")
            if not is_prime(p) or p >= 2**31:
                raise UnsupportedField(f"{p} is not a prime below 2^31")
            return cls(characteristic=p)
        raise UnsupportedField(f"Unknown field {descriptor!r} (use 'q' or 'p:<prime>')")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(characteristic=0)

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self) -> str:
        return "q" if self.is_rational else f"p:{self.characteristic}"


class HyperdepthConfig(BaseModel):
    """Configuration for the depth engine and the verifiers."""

    field: str = Field(default="q", description="Coefficient field: 'q' or 'p:<prime>'")
    prime_check: int = Field(default=DEFAULT_PRIME, description="Prime used for modular cross-checks")
    jobs: int = Field(default=1, description="Worker processes for the Betti map")
    brute_force_cap: int = Field(default=12, description="Edge cap of the exhaustive forest oracle")
    max_power: int = Field(default=4, description="Default largest power for depth functions")
    cross_check: bool = Field(default=False, description="Compare modular and rational ranks")
    verbose: bool = Field(default=False, description="Enable verbose output")

    @field_validator("field")
    @classmethod
    def validate_field(cls, v):
        """Validate the field descriptor parses."""
        FieldSpec.parse(v)
        return v

    @field_validator("prime_check")
    @classmethod
    def validate_prime_check(cls, v):
        """Validate the cross-check prime."""
        if not is_prime(v) or v >= 2**31:
            raise ValueError("prime_check must be a prime below 2^31")
        return v

    @field_validator("jobs", "brute_force_cap", "max_power")
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    @classmethod
    def load_from_file(cls, config_path: Optional[Path] = None) -> "HyperdepthConfig":
        """Load configuration from file."""
        if config_path is None:
            config_path = Path.cwd() / CONFIG_FILENAME

        if config_path.exists():
            with open(config_path, "r", encoding="utf-8") as f:
                config_data = json.load(f)
            return cls(**config_data)

        return cls()

    @classmethod
    def load_from_env(cls) -> "HyperdepthConfig":
        """Load configuration from environment variables."""
        config_data: Dict[str, Any] = {}

        if field := os.getenv("HYPERDEPTH_FIELD"):
            config_data["field"] = field
        if jobs := os.getenv("HYPERDEPTH_JOBS"):
            config_data["jobs"] = int(jobs)
        if cap := os.getenv("HYPERDEPTH_BRUTE_FORCE_CAP"):
            config_data["brute_force_cap"] = int(cap)
        if max_power := os.getenv("HYPERDEPTH_MAX_POWER"):
            config_data["max_power"] = int(max_power)
        if os.getenv("HYPERDEPTH_VERBOSE", "").lower() in ("true", "1", "yes"):
            config_data["verbose"] = True

        return cls(**config_data)

    def save_to_file(self, config_path: Optional[Path] = None) -> None:
        """Save configuration to file."""
        if config_path is None:
            config_path = Path.cwd() / CONFIG_FILENAME

        with open(config_path, "w", encoding="utf-8") as f:
            json.dump(self.model_dump(), f, indent=2)

    @classmethod
    def get_effective_config(cls, config_path: Optional[Path] = None) -> "HyperdepthConfig":
        """Merge file settings with environment overrides (env wins)."""
        config_data = cls.load_from_file(config_path).model_dump()
        env_config = cls.load_from_env()
        config_data.update(env_config.model_dump(exclude_unset=True))
        return cls(**config_data)

    def update(self, **kwargs) -> "HyperdepthConfig":
        """Return a new configuration with the given values replaced."""
        config_data = self.model_dump()
        config_data.update({k: v for k, v in kwargs.items() if v is not None})
        return HyperdepthConfig(**config_data)

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump()

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)
