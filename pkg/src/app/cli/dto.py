from pydantic import BaseModel, Field


class LinkageView(BaseModel):
    path1: list[str] = Field(description="path1 的顶点序列，从 s1 到 t1")
    path2: list[str] = Field(description="path2 的顶点序列，从 s2 到 t2")


class CheckReport(BaseModel):
    file: str = Field(description="输入文件路径，stdin 时为 -")
    vital: bool | None = Field(default=None, description="枚举判定的 vital 结果，超过 oracle 上限时为 None")
    xx_free: bool = Field(description="是否不含 XX linkage minor")
    truemper_n: int | None = Field(default=None, description="嵌入的 ladder 阶数，不可嵌入时为 None")
    certificate: dict | None = Field(default=None, description="TruemperCertificate 的字典形式")
    second_linkage: LinkageView | None = Field(default=None, description="非 vital 时的第二个 linkage")
    xx_witness: dict | None = Field(default=None, description="XX minor 的 witness")
    agree: bool = Field(description="三个判定是否一致")
    oracle_skipped: bool = Field(default=False, description="是否因为顶点数超过上限跳过枚举")


class PartitionReport(BaseModel):
    file: str = Field(description="输入文件路径")
    block_a: list[int] | None = Field(default=None, description="两两不交叉的 rung")
    block_b: list[int] | None = Field(default=None, description="反转 path2 后两两不交叉的 rung")


class PathwidthReport(BaseModel):
    file: str = Field(description="输入文件路径")
    width: int = Field(description="精确 pathwidth")
    bags: list[list[str]] = Field(description="最优 path decomposition 的 bag 序列")
