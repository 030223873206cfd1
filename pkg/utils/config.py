"""
创建日期：2026年02月11日
介绍： 配置加载器
"""
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict


def load_config(path: str = "config.yml") -> Dict[str, Any]:
    config_path = Path(path)
    if not config_path.exists():
        return {}
    with open(config_path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


class RankSettings(BaseModel):
    sample_count: int = 20
    sample_low: int = -10
    sample_high: int = 10
    symbolic_max_size: int = 64
    symbolic_max_vars: int = 8
    seed: int = 20260211


class ModuleSettings(BaseModel):
    verma_depth_cap: int = 24
    irreducibility_samples: int = 5
    irreducibility_radius: int = 3


class ScanSettings(BaseModel):
    jobs: int = 1
    max_degree: int = 4
    reducibility_dim_cap: int = 150
    candidate_bound: int = 3


class AtlasSettings(BaseSettings):
    """
    全局配置。优先级：构造参数 > 环境变量（SUPERATLAS_ 前缀） > 默认值。
    config.yml 的内容通过构造参数传入。
    """
    model_config = SettingsConfigDict(env_prefix="SUPERATLAS_", env_nested_delimiter="__")

    log_level: str = "WARNING"
    rank: RankSettings = RankSettings()
    modules: ModuleSettings = ModuleSettings()
    scan: ScanSettings = ScanSettings()


_config_path = "config.yml"


def set_config_path(path: str) -> None:
    """命令行 --config 指定配置文件后，库内的 get_settings() 都读这个文件"""
    global _config_path
    _config_path = path
    get_settings.cache_clear()


@lru_cache(maxsize=None)
def get_settings(path: Optional[str] = None) -> AtlasSettings:
    """
    读取配置文件并返回配置对象（按路径缓存）

    Args:
        path: 配置文件路径，默认为当前目录下的 config.yml

    Returns:
        AtlasSettings: 配置对象
    """
    return AtlasSettings(**load_config(path or _config_path))
