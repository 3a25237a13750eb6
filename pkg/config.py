from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    app_name: str = "fanlab"
    log_level: str = "INFO"
    threads: int = 1
    seed: int = 0
    node_budget: int = 1_000_000
    identity_tolerance: float = 1e-12
    composition_tolerance: float = 1e-9
    constraint_tolerance: float = 1e-9
    hit_slack: float = 1e-9
    linear_scan_limit: int = 65536
    gabi_h_cap: int = 2000
    default_bound: int = 2 ** 20

    class Config:
        env_file = ".env"
        env_prefix = "FANLAB_"


settings = Settings()
