from pydantic import BaseModel, Field


class Settings(BaseModel):
    """Tunable knobs shared by the services and the CLI."""

    sample_triples: int = Field(default=500, ge=1, description="Random triples per dimension in sampled sweeps")
    seed: int = Field(default=20240601, description="Seed for every random triple selection")
    fallback_node_budget: int = Field(default=200_000, ge=1, description="Search nodes the fallback may expand")
    fallback_spare_choices: int = Field(default=6, ge=1, description="Spare pairs the fallback tries per hub order")
    oracle_node_budget: int = Field(default=2_000_000, ge=1, description="Branch-and-bound nodes for the oracle")
    oracle_max_length: int = Field(default=7, ge=2, description="Longest T-path the oracle enumerates beyond BS_3")
    base_cache_size: int = Field(default=4096, ge=0)
