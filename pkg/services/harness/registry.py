# services/harness/registry.py
"""Name → suite runner table used by the cli `check` command and POST /checks/{suite}."""
from __future__ import annotations

from typing import Callable, Dict, Tuple

from loguru import logger

from core.errors import UnknownSuite
from services.endo import (
    DeltaCorrections,
    EndoParams,
    calibrate_corrections,
    check_homomorphism,
    printed_corrections,
)
from services.harness.models import CheckReport, SuiteConfig
from services.homlie import (
    check_hom_antisymmetry,
    check_hom_jacobi,
    check_induced_algebra,
    check_multiplicative,
)
from services.homrep import check_compat_27, check_homrep_26, check_weight_module, derive_spec
from services.homrep.models import HomModuleSpec
from services.intermediate import FamilyParams, check_lie_module, family_from_tag
from services.lie import check_antisymmetry, check_jacobi

SuiteRunner = Callable[[SuiteConfig], CheckReport]


def endo_from_config(config: SuiteConfig) -> Tuple[EndoParams, DeltaCorrections]:
    p = EndoParams.make(config.k, config.a, config.b, config.c, config.d)
    if config.corrections == "printed":
        return p, printed_corrections(p)
    return p, calibrate_corrections(p)


def family_from_config(config: SuiteConfig) -> FamilyParams:
    return family_from_tag(config.family, config.alpha, config.beta, config.F)


def spec_from_config(config: SuiteConfig) -> HomModuleSpec:
    p = EndoParams.make(config.k, config.a, config.b, config.c, config.d)
    return derive_spec(family_from_config(config), p, config.norm, strict=config.strict)


def _grid_opts(config: SuiteConfig) -> Dict[str, object]:
    return {
        "window": config.window,
        "max_counterexamples": config.max_counterexamples,
        "parallel": config.parallel,
    }


def _endo_suite(check) -> SuiteRunner:
    def run(config: SuiteConfig) -> CheckReport:
        p, dc = endo_from_config(config)
        return check(p, dc, **_grid_opts(config))
    return run


SUITES: Dict[str, SuiteRunner] = {
    "jacobi": lambda config: check_jacobi(**_grid_opts(config)),
    "antisym": lambda config: check_antisymmetry(**_grid_opts(config)),
    "endo-hom": _endo_suite(check_homomorphism),
    "hom-jacobi": _endo_suite(check_hom_jacobi),
    "multiplicative": _endo_suite(check_multiplicative),
    "hom-antisym": _endo_suite(check_hom_antisymmetry),
    "induced": _endo_suite(check_induced_algebra),
    "lie-module": lambda config: check_lie_module(
        family_from_config(config), sign=config.sign, **_grid_opts(config)),
    "compat-27": lambda config: check_compat_27(
        spec_from_config(config), sign=config.sign, **_grid_opts(config)),
    "homrep-26": lambda config: check_homrep_26(
        spec_from_config(config), sign=config.sign, **_grid_opts(config)),
    "weight": lambda config: check_weight_module(
        spec_from_config(config), sign=config.sign, **_grid_opts(config)),
}


def run_suite(name: str, config: SuiteConfig | None = None) -> CheckReport:
    runner = SUITES.get(name)
    if runner is None:
        raise UnknownSuite(name)
    config = config or SuiteConfig()
    logger.debug(f"running suite {name} with {config.model_dump(exclude_defaults=True)}")
    report = runner(config)
    logger.debug(f"{name}: {report.status} ({report.failures}/{report.checked})")
    return report
