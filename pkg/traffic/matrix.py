from typing import Dict, Iterator, List, Mapping, Tuple

from common.errors import TrafficError
from common.log import logger

Pair = Tuple[str, str]


class TrafficMatrix(object):
    """
    Demand volume t_uv per ordered router pair (u != v), in the same units as port capacities.
    Pairs that are absent carry no demand.
    """

    def __init__(self, demands: Mapping[Pair, float] = None):
        self._demands: Dict[Pair, float] = {}
        for (u, v), volume in (demands or {}).items():
            if u == v:
                raise TrafficError("self demand {}->{} is not allowed".format(u, v), pair=[u, v])
            volume = float(volume)
            if not volume >= 0:
                raise TrafficError("demand {}->{} must be non-negative, got {}".format(u, v, volume), pair=[u, v])
            self._demands[(u, v)] = volume

    def __getitem__(self, pair: Pair) -> float:
        return self._demands.get(pair, 0.0)

    def __contains__(self, pair) -> bool:
        return pair in self._demands

    def __len__(self):
        return len(self._demands)

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self._demands))

    def __eq__(self, other):
        if not isinstance(other, TrafficMatrix):
            return NotImplemented
        return self.as_dict(skip_zero=True) == other.as_dict(skip_zero=True)

    def items(self) -> List[Tuple[Pair, float]]:
        return [(pair, self._demands[pair]) for pair in sorted(self._demands)]

    def nonzero(self) -> List[Tuple[Pair, float]]:
        return [(pair, t) for pair, t in self.items() if t > 0]

    def total(self) -> float:
        return sum(self._demands.values())

    def routers(self) -> List[str]:
        return sorted({r for pair in self._demands for r in pair})

    def as_dict(self, skip_zero=False) -> Dict[Pair, float]:
        return {p: t for p, t in self._demands.items() if not (skip_zero and t == 0)}

    def __repr__(self):
        return "TrafficMatrix(demands={}, total={:.6g})".format(len(self._demands), self.total())


def scale_matrix(matrix: TrafficMatrix, factor: float) -> TrafficMatrix:
    if not factor > 0:
        raise TrafficError("scale factor must be positive, got {}".format(factor), factor=factor)
    return TrafficMatrix({pair: t * factor for pair, t in matrix.items()})


def downsample_matrix(matrix: TrafficMatrix, max_demands: int) -> Tuple[TrafficMatrix, float]:
    """
    只保留最大的 max_demands 个需求 (同等大小按节点对排序)
    :return: (新矩阵, 被丢弃的流量占比)
    """
    if max_demands <= 0:
        raise TrafficError("max_demands must be positive, got {}".format(max_demands))
    demands = matrix.nonzero()
    if len(demands) <= max_demands:
        return TrafficMatrix(dict(demands)), 0.0
    kept = sorted(demands, key=lambda item: (-item[1], item[0]))[:max_demands]
    total = matrix.total()
    dropped = 1.0 - sum(t for _, t in kept) / total
    logger.warning("[Traffic] downsampled {} demands to {}, dropped volume share {:.4f}".format(len(demands), max_demands, dropped))
    return TrafficMatrix(dict(kept)), dropped
