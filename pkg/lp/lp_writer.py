"""
CPLEX LP text export, for cross-checking a model with an external solver.
"""
import math
import re

from common.log import logger
from lp.model import BINARY, EQ, GE, INTEGER, LE, MAXIMIZE, LpModel

MAX_LINE = 200
_SENSE_TEXT = {LE: "<=", GE: ">=", EQ: "="}


def lp_name(prefix: str, index: int, name: str) -> str:
    return "{}{}_{}".format(prefix, index, re.sub(r"[^A-Za-z0-9_]", "_", name))[:255]


def _format_terms(terms):
    lines, current = [], ""
    for coef, var in terms:
        sign = "-" if coef < 0 else "+"
        token = " {} {} {}".format(sign, repr(abs(float(coef))), var)
        if len(current) + len(token) > MAX_LINE:
            lines.append(current)
            current = "   "
        current += token
    lines.append(current)
    return lines


def write_lp(model: LpModel, path: str) -> str:
    names = [lp_name("v", i, n) for i, n in enumerate(model.var_names)]
    out = ["\\ model {}".format(model.name), "Maximize" if model.objective_sense == MAXIMIZE else "Minimize"]
    objective = [(coef, names[idx]) for idx, coef in sorted(model.objective.items()) if coef != 0]
    if model.objective_constant:
        # LP 格式没有常数项，写在注释里
        out.insert(1, "\\ objective constant {}".format(repr(model.objective_constant)))
    if objective:
        lines = _format_terms(objective)
        out.append(" obj:" + lines[0])
        out.extend(lines[1:])
    else:
        out.append(" obj: 0 {}".format(names[0]) if names else " obj:")

    out.append("Subject To")
    A = model.constraint_matrix()
    for row in range(model.num_constraints):
        start, end = A.indptr[row], A.indptr[row + 1]
        terms = [(A.data[k], names[A.indices[k]]) for k in range(start, end)]
        label = lp_name("r", row, model.con_names[row])
        if not terms:
            terms = [(0.0, names[0])] if names else []
        lines = _format_terms(terms)
        lines[-1] += " {} {}".format(_SENSE_TEXT[model.senses[row]], repr(model.rhs[row]))
        out.append(" {}:{}".format(label, lines[0]))
        out.extend(lines[1:])

    out.append("Bounds")
    for name, lo, hi, kind in zip(names, model.lo, model.hi, model.kinds):
        if kind == BINARY and lo == 0 and hi == 1:
            continue
        if math.isinf(lo) and math.isinf(hi):
            out.append(" {} free".format(name))
        elif math.isinf(lo):
            out.append(" -inf <= {} <= {}".format(name, repr(hi)))
        elif math.isinf(hi):
            out.append(" {} >= {}".format(name, repr(lo)))
        else:
            out.append(" {} <= {} <= {}".format(repr(lo), name, repr(hi)))

    generals = [n for n, k in zip(names, model.kinds) if k == INTEGER]
    binaries = [n for n, k in zip(names, model.kinds) if k == BINARY]
    if generals:
        out.append("General")
        out.extend(" " + n for n in generals)
    if binaries:
        out.append("Binary")
        out.extend(" " + n for n in binaries)
    out.append("End")

    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(out) + "\n")
    logger.info("[LP] wrote {} ({} variables, {} constraints)".format(path, model.num_vars, model.num_constraints))
    return path
