# routing mode
SPLITTING = "splitting"
NO_SPLITTING = "no-splitting"
MODES = [SPLITTING, NO_SPLITTING]

# ecmp mode
EVEN_SPLIT = "even-split"
SINGLE_PATH = "single-path"
ECMP_MODES = [EVEN_SPLIT, SINGLE_PATH]

# method labels used in reports
METHOD_2SRG = "2SRG"
METHOD_2SRG_NS = "2SRG-NS"
METHOD_SPR = "SPR"
METHOD_ORACLE = "ORACLE"

# port role
BACKBONE = "backbone"
ACCESS = "access"

# solver backend
HIGHS = "highs"
SIMPLEX = "simplex"  # 仓库内置的单纯形 + 分支定界
PULP = "pulp"  # 可选，需要安装 pulp
SOLVER_BACKENDS = [HIGHS, SIMPLEX, PULP]

# oracle objective
OBJECTIVE_LINECARDS = "linecards"
OBJECTIVE_PORTS = "ports"

# configuration status
STATUS_OPTIMAL = "optimal"
STATUS_TIME_LIMIT = "time-limit"
STATUS_INFEASIBLE_BASELINE = "infeasible-baseline"

# output format
JSON = "json"
CSV = "csv"
BOTH = "both"

# subcommand
OPTIMIZE = "optimize"
BASELINE = "baseline"
ANALYZE = "analyze"
EVALUATE = "evaluate"
COMPARE = "compare"
GENERATE = "generate"
COMMANDS = [OPTIMIZE, BASELINE, ANALYZE, EVALUATE, COMPARE, GENERATE]

CONFIGURATION_SCHEMA_VERSION = 1

# numeric tolerance
FEASIBILITY_TOL = 1e-6
ROUTING_SUM_TOL = 1e-9
