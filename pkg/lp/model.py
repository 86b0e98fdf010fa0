"""
Solver-agnostic linear / mixed-integer program and its solution.
"""
import math
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np
from scipy import sparse

from common import const
from common.errors import LpModelError, SolutionVerificationError
from common.log import logger

# variable kind
CONTINUOUS = "continuous"
BINARY = "binary"
INTEGER = "integer"
KINDS = [CONTINUOUS, BINARY, INTEGER]

# constraint sense
LE = "<="
GE = ">="
EQ = "=="
SENSES = [LE, GE, EQ]

MINIMIZE = "min"
MAXIMIZE = "max"

# solution status
OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
TIME_LIMIT = "time-limit"
UNBOUNDED = "unbounded"

Coefficients = Union[Mapping[int, float], Iterable[Tuple[int, float]]]


@dataclass
class SolveLimits:
    time_limit: float = 3600.0
    mip_gap: float = 1e-4
    node_limit: Optional[int] = None


@dataclass
class MatrixForm:
    """min c @ x + constant  s.t. A_ub @ x <= b_ub, A_eq @ x == b_eq, lo <= x <= hi"""

    c: np.ndarray
    constant: float
    A_ub: sparse.csr_matrix
    b_ub: np.ndarray
    A_eq: sparse.csr_matrix
    b_eq: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    integrality: np.ndarray
    # 1 for minimisation, -1 when the model maximises and c was negated
    sign: float = 1.0


@dataclass
class LpSolution:
    status: str
    values: Optional[np.ndarray]
    objective: Optional[float]
    stats: Dict[str, object] = field(default_factory=dict)

    @property
    def has_values(self) -> bool:
        return self.values is not None

    def value(self, index: int) -> float:
        if self.values is None:
            raise LpModelError("solution with status {} carries no values".format(self.status))
        return float(self.values[index])

    def __repr__(self):
        return "LpSolution(status={}, objective={}, stats={})".format(self.status, self.objective, self.stats)


class LpModel(object):
    def __init__(self, name: str = "model"):
        self.name = name
        self.var_names: List[str] = []
        self.lo: List[float] = []
        self.hi: List[float] = []
        self.kinds: List[str] = []
        self._keys: Dict[Hashable, int] = {}
        # constraint rows in coordinate form
        self._rows: List[int] = []
        self._cols: List[int] = []
        self._vals: List[float] = []
        self.senses: List[str] = []
        self.rhs: List[float] = []
        self.con_names: List[str] = []
        self.objective: Dict[int, float] = {}
        self.objective_constant = 0.0
        self.objective_sense = MINIMIZE

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def num_constraints(self) -> int:
        return len(self.senses)

    @property
    def is_mip(self) -> bool:
        return any(k != CONTINUOUS for k in self.kinds)

    def add_variable(self, name: str, lo: float = 0.0, hi: Optional[float] = None, kind: str = CONTINUOUS, key: Hashable = None) -> int:
        if kind not in KINDS:
            raise LpModelError("unknown variable kind {}".format(kind), variable=name)
        if kind == BINARY:
            lo = max(0.0, lo if lo is not None else 0.0)
            hi = 1.0 if hi is None else min(1.0, hi)
        lo = -math.inf if lo is None else float(lo)
        hi = math.inf if hi is None else float(hi)
        if lo > hi:
            raise LpModelError("variable {} has lo {} > hi {}".format(name, lo, hi), variable=name)
        if key is not None:
            if key in self._keys:
                raise LpModelError("duplicate variable key {!r}".format(key), variable=name)
            self._keys[key] = self.num_vars
        self.var_names.append(name)
        self.lo.append(lo)
        self.hi.append(hi)
        self.kinds.append(kind)
        return self.num_vars - 1

    def index_of(self, key: Hashable) -> int:
        try:
            return self._keys[key]
        except KeyError:
            raise LpModelError("no variable with key {!r}".format(key))

    def has_key(self, key: Hashable) -> bool:
        return key in self._keys

    def keys(self) -> Dict[Hashable, int]:
        return dict(self._keys)

    def fix(self, index: int, value: float):
        self.lo[index] = float(value)
        self.hi[index] = float(value)

    def add_constraint(self, coeffs: Coefficients, sense: str, rhs: float, name: Optional[str] = None) -> int:
        if sense not in SENSES:
            raise LpModelError("unknown constraint sense {}".format(sense))
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        row = self.num_constraints
        for idx, coef in items:
            if not 0 <= idx < self.num_vars:
                raise LpModelError("constraint {} references undeclared variable {}".format(name or row, idx))
            if coef == 0:
                continue
            self._rows.append(row)
            self._cols.append(int(idx))
            self._vals.append(float(coef))
        self.senses.append(sense)
        self.rhs.append(float(rhs))
        self.con_names.append(name or "c{}".format(row))
        return row

    def set_objective(self, coeffs: Coefficients, sense: str = MINIMIZE, constant: float = 0.0):
        if sense not in (MINIMIZE, MAXIMIZE):
            raise LpModelError("unknown objective sense {}".format(sense))
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        objective = {}
        for idx, coef in items:
            if not 0 <= idx < self.num_vars:
                raise LpModelError("objective references undeclared variable {}".format(idx))
            objective[int(idx)] = objective.get(int(idx), 0.0) + float(coef)
        self.objective = objective
        self.objective_sense = sense
        self.objective_constant = float(constant)

    def constraint_matrix(self) -> sparse.csr_matrix:
        # duplicates are summed by the coo -> csr conversion
        return sparse.coo_matrix((self._vals, (self._rows, self._cols)), shape=(self.num_constraints, self.num_vars)).tocsr()

    def objective_vector(self) -> np.ndarray:
        c = np.zeros(self.num_vars)
        for idx, coef in self.objective.items():
            c[idx] = coef
        return c

    def objective_value(self, values: np.ndarray) -> float:
        return float(self.objective_vector() @ values) + self.objective_constant

    def to_matrices(self) -> MatrixForm:
        A = self.constraint_matrix()
        senses = np.array(self.senses, dtype=object)
        rhs = np.array(self.rhs, dtype=float)
        le = np.flatnonzero(senses == LE)
        ge = np.flatnonzero(senses == GE)
        eq = np.flatnonzero(senses == EQ)
        A_ub = sparse.vstack([A[le], -A[ge]]).tocsr() if len(le) + len(ge) else sparse.csr_matrix((0, self.num_vars))
        b_ub = np.concatenate([rhs[le], -rhs[ge]])
        A_eq = A[eq].tocsr() if len(eq) else sparse.csr_matrix((0, self.num_vars))
        sign = -1.0 if self.objective_sense == MAXIMIZE else 1.0
        integrality = np.array([0 if k == CONTINUOUS else 1 for k in self.kinds], dtype=int)
        return MatrixForm(
            sign * self.objective_vector(),
            sign * self.objective_constant,
            A_ub,
            b_ub,
            A_eq,
            rhs[eq],
            np.array(self.lo, dtype=float),
            np.array(self.hi, dtype=float),
            integrality,
            sign,
        )

    def __repr__(self):
        return "LpModel(name={}, vars={}, constraints={}, mip={})".format(self.name, self.num_vars, self.num_constraints, self.is_mip)


def verify_solution(model: LpModel, solution: LpSolution, tol: float = const.FEASIBILITY_TOL) -> float:
    """
    将解代回模型逐项检查：变量界、约束行、整数性和目标值
    容差为绝对容差，按 max(1, |rhs|) 放大
    :return: 最大违反量
    """
    if not solution.has_values:
        return 0.0
    x = np.asarray(solution.values, dtype=float)
    if x.shape != (model.num_vars,):
        raise SolutionVerificationError("solution has {} values for {} variables".format(x.shape, model.num_vars))
    worst = 0.0
    problems = []
    lo = np.array(model.lo)
    hi = np.array(model.hi)
    with np.errstate(invalid="ignore"):
        below = np.where(np.isfinite(lo), lo - x, 0.0) / np.maximum(1.0, np.abs(np.where(np.isfinite(lo), lo, 0.0)))
        above = np.where(np.isfinite(hi), x - hi, 0.0) / np.maximum(1.0, np.abs(np.where(np.isfinite(hi), hi, 0.0)))
    bound_violation = np.maximum(below, above)
    for idx in np.flatnonzero(bound_violation > tol)[:5]:
        problems.append("variable {} = {} outside [{}, {}]".format(model.var_names[idx], x[idx], model.lo[idx], model.hi[idx]))
    worst = max(worst, float(bound_violation.max(initial=0.0)))

    for idx, kind in enumerate(model.kinds):
        if kind != CONTINUOUS and abs(x[idx] - round(x[idx])) > tol:
            problems.append("variable {} = {} is not integral".format(model.var_names[idx], x[idx]))
            worst = max(worst, abs(x[idx] - round(x[idx])))

    activity = model.constraint_matrix() @ x
    for row, (sense, rhs) in enumerate(zip(model.senses, model.rhs)):
        scale = max(1.0, abs(rhs))
        if sense == LE:
            excess = (activity[row] - rhs) / scale
        elif sense == GE:
            excess = (rhs - activity[row]) / scale
        else:
            excess = abs(activity[row] - rhs) / scale
        if excess > tol:
            problems.append("constraint {}: {:.9g} {} {:.9g}".format(model.con_names[row], activity[row], sense, rhs))
        worst = max(worst, excess)

    if solution.objective is not None:
        recomputed = model.objective_value(x)
        if abs(recomputed - solution.objective) > tol * max(1.0, abs(recomputed)):
            problems.append("objective {} differs from recomputed {}".format(solution.objective, recomputed))

    if problems:
        logger.error("[LP] solution of {} failed verification: {}".format(model.name, "; ".join(problems[:5])))
        raise SolutionVerificationError("solution violates the model: {}".format("; ".join(problems[:5])), model=model.name, violations=len(problems))
    return worst
