from .run_config import RunConfig, load_run_config, apply_override
