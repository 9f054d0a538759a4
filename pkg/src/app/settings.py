import os
from functools import lru_cache
from pathlib import Path

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from src.app.core.constants import (
    DEFAULT_ORACLE_VERTEX_CAP,
    DEFAULT_PARTITION_RUNG_CAP,
    DEFAULT_PATHWIDTH_VERTEX_CAP,
    DEFAULT_XX_VERTEX_CAP,
)
from src.app.core.errors import ConfigurationError
from src.utils.logger import logger

project_root = Path(__file__).resolve().parents[2]
default_config_path = project_root / "config" / "app_config.yaml"
env_path = project_root / "config" / ".env"


class OracleSettings(BaseModel):
    vertex_cap: int = Field(default=DEFAULT_ORACLE_VERTEX_CAP, ge=1, description="枚举 linkage 的顶点上限")


class XxSettings(BaseModel):
    vertex_cap: int = Field(default=DEFAULT_XX_VERTEX_CAP, ge=1, description="XX minor 搜索的顶点上限")


class PathwidthSettings(BaseModel):
    vertex_cap: int = Field(default=DEFAULT_PATHWIDTH_VERTEX_CAP, ge=1, description="精确 pathwidth 的顶点上限")


class PartitionSettings(BaseModel):
    rung_cap: int = Field(default=DEFAULT_PARTITION_RUNG_CAP, ge=1, description="valid partition 搜索的 rung 上限")


class RandomSettings(BaseModel):
    density: float = Field(default=0.5, ge=0.0, le=1.0, description="每条 rung 被保留的概率")
    contract_probability: float = Field(default=0.5, ge=0.0, le=1.0, description="每条 path edge 被收缩的概率")


class LoggingSettings(BaseModel):
    level: str = Field(default="INFO", description="控制台日志级别")


class AppSettings(BaseModel):
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    xx: XxSettings = Field(default_factory=XxSettings)
    pathwidth: PathwidthSettings = Field(default_factory=PathwidthSettings)
    partition: PartitionSettings = Field(default_factory=PartitionSettings)
    random: RandomSettings = Field(default_factory=RandomSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


def _read_yaml(path: Path) -> dict:
    """加载 app 配置文件。

    Args:
        path (Path): YAML 文件路径。

    Returns:
        dict: 解析后的 YAML 数据，文件不存在时为空字典。

    """
    if not path.is_file():
        logger.debug(f"配置文件不存在，使用默认配置：{path}")
        return {}
    with open(path, encoding="utf-8") as file:
        return yaml.safe_load(file) or {}


def _apply_env_overrides(data: dict) -> dict:
    oracle_cap = os.getenv("VITAL_LINKAGE_ORACLE_CAP")
    if oracle_cap:
        data.setdefault("oracle", {})["vertex_cap"] = int(oracle_cap)
    log_level = os.getenv("VITAL_LINKAGE_LOG_LEVEL")
    if log_level:
        data.setdefault("logging", {})["level"] = log_level
    return data


@lru_cache(maxsize=1)
def load_app_settings() -> AppSettings:
    """Merge YAML defaults, ``config/.env`` and the process environment."""
    load_dotenv(dotenv_path=env_path)
    config_path = Path(os.getenv("VITAL_LINKAGE_CONFIG", str(default_config_path)))
    try:
        settings = AppSettings(**_apply_env_overrides(_read_yaml(config_path)))
    except (ValueError, yaml.YAMLError) as exc:
        raise ConfigurationError(f"invalid configuration ({config_path}): {exc}") from exc
    logger.debug(f"settings loaded from {config_path}: {settings.model_dump()}")
    return settings
