# -*- coding: utf-8 -*-


from typing import Any

from C41811.Config import ConfigPool
from C41811.Config import FieldDefinition as FieldDef
from C41811.Config import MappingConfigData
from C41811.Config.processor.RuamelYaml import RuamelYamlSL

from ..algebra import INTERSECTION_SEED
from .helper import DEFAULT_LANGUAGE
from .helper import h

CliConfigPool = ConfigPool(root_path="./config")

COMMAND_NAMES: tuple[str, ...] = (
    "gale",
    "rnc",
    "conic5",
    "pencil9",
    "eightp4",
    "sevenp3",
    "coble9",
    "ci33",
    "verify",
    "gen",
    "h0",
    "family",
)


def _build_default_cmd_cfg(name: str) -> dict[str, Any]:
    return {
        "enabled": True,
        "name": name,
    }


DEFAULT_CONFIG: dict[str, Any] = {
    "global": {
        "language": DEFAULT_LANGUAGE,
        "log_level": "WARNING",
        # 计时会使报告在多次运行间不再逐字节相同
        "record_timings": False,
        "report_indent": FieldDef(int, 2),
    },
    "budgets": {
        "intersection_retries": FieldDef(int, 20),
        "intersection_seed": FieldDef(int, INTERSECTION_SEED),
        "certificate_seed": FieldDef(int, 0),
        "certificate_random_tries": FieldDef(int, 100),
        "certificate_power_sweep": FieldDef(int, 1000),
        "resample": FieldDef(int, 1000),
        "triple_retries": FieldDef(int, 500),
        "subset_checks": FieldDef(int, 200),
        "enumeration_limit": FieldDef(int, 10000),
    },
    "commands": {
        **{name: _build_default_cmd_cfg(name) for name in COMMAND_NAMES},
        "coble9": {
            "samples": FieldDef(int, 40),
            **_build_default_cmd_cfg("coble9"),
        },
    },
}

type MCD = MappingConfigData[dict[str, Any]]


class CommandConfig:
    Config: MCD

    Enabled: bool
    Name: str

    @classmethod
    def initialize(cls, config: MCD) -> None:
        cls.Config = config

        cls.Enabled = config.retrieve("enabled")
        cls.Name = config.retrieve("name")


class Config:
    Config: MCD

    Language: str
    LogLevel: str
    RecordTimings: bool
    ReportIndent: int

    class Budgets:
        IntersectionRetries: int
        IntersectionSeed: int
        CertificateSeed: int
        CertificateRandomTries: int
        CertificatePowerSweep: int
        Resample: int
        TripleRetries: int
        SubsetChecks: int
        EnumerationLimit: int

        @classmethod
        def initialize(cls, config: MCD) -> None:
            cls.IntersectionRetries = int(config.retrieve("intersection_retries"))
            cls.IntersectionSeed = int(config.retrieve("intersection_seed"))
            cls.CertificateSeed = int(config.retrieve("certificate_seed"))
            cls.CertificateRandomTries = int(config.retrieve("certificate_random_tries"))
            cls.CertificatePowerSweep = int(config.retrieve("certificate_power_sweep"))
            cls.Resample = int(config.retrieve("resample"))
            cls.TripleRetries = int(config.retrieve("triple_retries"))
            cls.SubsetChecks = int(config.retrieve("subset_checks"))
            cls.EnumerationLimit = int(config.retrieve("enumeration_limit"))

    class Gale(CommandConfig):
        ...

    class Rnc(CommandConfig):
        ...

    class Conic5(CommandConfig):
        ...

    class Pencil9(CommandConfig):
        ...

    class EightP4(CommandConfig):
        ...

    class SevenP3(CommandConfig):
        ...

    class Coble9(CommandConfig):
        Samples: int

        @classmethod
        def initialize(cls, config: MCD) -> None:
            super().initialize(config)
            cls.Samples = int(config.retrieve("samples"))

    class Ci33(CommandConfig):
        ...

    class Verify(CommandConfig):
        ...

    class Gen(CommandConfig):
        ...

    class H0(CommandConfig):
        ...

    class Family(CommandConfig):
        ...

    @classmethod
    def initialize(cls) -> None:
        RuamelYamlSL().register_to(CliConfigPool)
        cls.Config = CliConfigPool.require('', f"{h.pkg_name}.yaml", DEFAULT_CONFIG).check()

        cls.Language = cls.Config.retrieve("global\\.language")
        cls.LogLevel = str(cls.Config.retrieve("global\\.log_level")).upper()
        cls.RecordTimings = bool(cls.Config.retrieve("global\\.record_timings"))
        cls.ReportIndent = int(cls.Config.retrieve("global\\.report_indent"))

        cls.Budgets.initialize(cls.Config.retrieve("budgets"))

        for name, command in cls.commands().items():
            command.initialize(cls.Config.retrieve(f"commands\\.{name}"))

    @classmethod
    def commands(cls) -> dict[str, type[CommandConfig]]:
        """
        配置中的命令名到命令配置类
        """
        return {
            "gale": cls.Gale,
            "rnc": cls.Rnc,
            "conic5": cls.Conic5,
            "pencil9": cls.Pencil9,
            "eightp4": cls.EightP4,
            "sevenp3": cls.SevenP3,
            "coble9": cls.Coble9,
            "ci33": cls.Ci33,
            "verify": cls.Verify,
            "gen": cls.Gen,
            "h0": cls.H0,
            "family": cls.Family,
        }


def certificate_options() -> dict[str, int]:
    """
    证书搜索的预算
    """
    return {
        "random_tries": Config.Budgets.CertificateRandomTries,
        "power_sweep": Config.Budgets.CertificatePowerSweep,
    }


def intersection_options() -> dict[str, int]:
    """
    求交的预算
    """
    return {
        "retries": Config.Budgets.IntersectionRetries,
        "seed": Config.Budgets.IntersectionSeed,
    }


__all__ = (
    "COMMAND_NAMES",
    "DEFAULT_CONFIG",

    "CommandConfig",
    "Config",

    "certificate_options",
    "intersection_options",
)
