from dataclasses import dataclass, field
from typing import FrozenSet, Optional

from common import const
from common.errors import ConfigError
from lp.model import SolveLimits


@dataclass(frozen=True)
class OptimizationParams:
    theta: float = 0.7
    mode: str = const.SPLITTING
    ecmp_mode: str = const.EVEN_SPLIT
    solver_backend: str = const.HIGHS
    limits: SolveLimits = field(default_factory=SolveLimits)
    # pi binary: the port LP is solved as a MILP instead of its relaxation
    port_integrality: bool = False
    candidate_intermediates: Optional[FrozenSet[str]] = None
    # None: the slot count of each router's linecards
    ports_per_linecard: Optional[int] = None
    # keep the rounded shortest-path routing when it needs fewer ports
    compare_with_spr: bool = True
    # oracle only: literal port -> linecard mapping instead of packing
    fixed_mapping: bool = False
    oracle_max_ports: int = 10
    oracle_max_nodes: int = 6

    def __post_init__(self):
        if not 0 < self.theta <= 1:
            raise ConfigError("theta must lie in (0, 1], got {}".format(self.theta), theta=self.theta)
        if self.mode not in const.MODES:
            raise ConfigError("unknown mode {}".format(self.mode), mode=self.mode)
        if self.ecmp_mode not in const.ECMP_MODES:
            raise ConfigError("unknown ecmp mode {}".format(self.ecmp_mode), ecmp_mode=self.ecmp_mode)
        if self.solver_backend not in const.SOLVER_BACKENDS:
            raise ConfigError("unknown solver backend {}".format(self.solver_backend), solver_backend=self.solver_backend)
        if self.ports_per_linecard is not None and self.ports_per_linecard <= 0:
            raise ConfigError("ports_per_linecard must be positive")
        if self.candidate_intermediates is not None:
            object.__setattr__(self, "candidate_intermediates", frozenset(self.candidate_intermediates))

    @property
    def method(self) -> str:
        return const.METHOD_2SRG if self.mode == const.SPLITTING else const.METHOD_2SRG_NS

    @classmethod
    def from_config(cls, config) -> "OptimizationParams":
        candidates = config.get("candidate_intermediates")
        return cls(
            theta=float(config.get("theta", 0.7)),
            mode=config.get("mode", const.SPLITTING),
            ecmp_mode=config.get("ecmp_mode", const.EVEN_SPLIT),
            solver_backend=config.get("solver_backend", const.HIGHS),
            limits=SolveLimits(time_limit=float(config.get("time_limit", 3600)), mip_gap=float(config.get("mip_gap", 1e-4))),
            port_integrality=bool(config.get("port_integrality", False)),
            candidate_intermediates=frozenset(candidates) if candidates else None,
            ports_per_linecard=int(config.get("ports_per_linecard", 8)),
            oracle_max_ports=int(config.get("oracle_max_ports", 10)),
            oracle_max_nodes=int(config.get("oracle_max_nodes", 6)),
        )
