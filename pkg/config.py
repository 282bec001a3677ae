from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    """Configuration for sekwl"""

    model_config = SettingsConfigDict(env_prefix="SEKWL_", env_file=".env", extra="ignore")

    # Reproducibility and parallelism
    seed: int = Field(0, description="Master seed every random choice descends from")
    threads: int = Field(1, ge=1, description="Worker processes")

    # Encoding and refinement defaults
    hops: int = Field(2, ge=1, description="Hop radius K")
    walk_length: int = Field(6, ge=1, description="Walk length l")
    max_rounds: int = Field(10, ge=1, description="Refinement round limit T")
    agg: Literal["mean", "sum"] = "mean"
    encoding_radius: int = Field(1, ge=1, description="Ego-net radius of the encodings used by refinement")
    encoding_scope: Literal["graph", "egonet"] = "egonet"
    quantize_digits: int = Field(9, ge=1)
    hash_key: str = "sekwl-colors-v1"

    # Message passing
    combine: Literal["sum", "geometric"] = "sum"
    alpha: float = Field(0.5, gt=0.0, le=1.0)
    sampler_cap: Optional[int] = Field(None, ge=1)

    # Harness
    separation_tol: float = 1e-12
    theorem1_threshold: float = 0.95
    counting_threshold: float = 0.9
    enumerate_limit: int = 64

    # Output
    output_dir: str = "./reports"
    log_level: str = "INFO"


# Global configuration instance
config = Config()


def get_run_defaults() -> Dict[str, Any]:
    """Experiment defaults the CLI starts from"""
    return {
        "seed": config.seed,
        "threads": config.threads,
        "K": config.hops,
        "l": config.walk_length,
        "T": config.max_rounds,
        "agg": config.agg,
        "radius": config.encoding_radius,
        "scope": config.encoding_scope,
        "combine": config.combine,
        "alpha": config.alpha,
        "sampler_cap": config.sampler_cap,
        "digits": config.quantize_digits,
    }


class RunConfig(BaseModel):
    """Parsed flags of one CLI invocation, echoed into its reports"""

    command: str
    inputs: List[str] = Field(default_factory=list)
    generators: List[str] = Field(default_factory=list)
    K: int = config.hops
    l: int = config.walk_length
    T: int = config.max_rounds
    agg: str = config.agg
    radius: int = config.encoding_radius
    scope: str = config.encoding_scope
    combine: str = config.combine
    alpha: float = config.alpha
    sampler_cap: Optional[int] = config.sampler_cap
    digits: int = config.quantize_digits
    seed: int = config.seed
    threads: int = config.threads
    output: Optional[str] = None
    format: str = "json"
    extra: Dict[str, Any] = Field(default_factory=dict)

    def echo(self) -> Dict[str, Any]:
        """Config as written into reports; thread count is left out since output never depends on it"""
        return self.model_dump(exclude={"threads"})
