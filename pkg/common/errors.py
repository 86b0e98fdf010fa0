"""
Exception hierarchy shared by every package.
Library code raises these; app.py and the Bridge turn them into error replies.
"""


class GreenSrError(Exception):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        return {"error": self.code, "message": self.message, "details": self.details}


class ConfigError(GreenSrError):
    code = "config"


class NetworkError(GreenSrError):
    code = "network"


class UnknownArcError(NetworkError):
    code = "unknown-arc"


class PlanError(GreenSrError):
    code = "plan"


class InconsistentPlanError(PlanError):
    code = "inconsistent-plan"


class TrafficError(GreenSrError):
    code = "traffic"


class ProfileError(TrafficError):
    code = "profile"


class RoutingError(GreenSrError):
    code = "routing"


class LpModelError(GreenSrError):
    code = "lp-model"


class SolverError(GreenSrError):
    code = "solver"


class SolutionVerificationError(SolverError):
    code = "solution-verification"


class OptimizationError(GreenSrError):
    code = "optimization"


class InfeasibleDemandError(OptimizationError):
    code = "infeasible-demand"


class OptimizationInfeasibleError(OptimizationError):
    code = "infeasible"


class InstanceTooLargeError(OptimizationError):
    code = "instance-too-large"


class RoundingError(OptimizationError):
    code = "rounding"


class RepetitaFormatError(GreenSrError):
    code = "repetita-format"

    def __init__(self, path, line_no, message, **details):
        super().__init__("{}:{}: {}".format(path, line_no, message), path=str(path), line=line_no, **details)
        self.path = path
        self.line_no = line_no
