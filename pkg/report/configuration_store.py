"""
Stored SR configurations: one JSON document per configuration, versioned by "schema_version".
"""
import json

import numpy as np

from common import const
from common.errors import ConfigError, PlanError
from common.log import logger
from common.utils import dumps_json
from evaluation.mlu import utilization
from net.network import Network
from net.plan import ActivationPlan, validate_plan
from optimizer.configuration import SrConfiguration


def configuration_document(network: Network, configuration: SrConfiguration, instance: str) -> dict:
    plan = configuration.plan
    port_linecards = None
    if plan.port_linecards is not None:
        port_linecards = [{"port": pid, "router": router, "linecard": lc} for (pid, router), lc in sorted(plan.port_linecards.items())]
    return {
        "schema_version": const.CONFIGURATION_SCHEMA_VERSION,
        "instance": instance,
        "method": configuration.method,
        "mode": configuration.mode,
        "ecmp_mode": configuration.ecmp_mode,
        "theta": float(configuration.theta),
        "status": configuration.status,
        "lp_objective": None if configuration.lp_objective is None else float(configuration.lp_objective),
        "warnings": list(configuration.warnings),
        "mlu": float(configuration.mlu),
        "routing": [
            {"src": u, "dst": v, "segments": {w: float(x) for w, x in sorted(row.items())}}
            for (u, v), row in sorted(configuration.routing.items())
        ],
        "ports": dict(sorted(plan.port_states.items())),
        "linecards": dict(sorted(plan.linecard_states.items())),
        "port_linecards": port_linecards,
        "arc_traffic": configuration.arc_loads(network),
    }


def save_configuration(path: str, network: Network, configuration: SrConfiguration, instance: str) -> str:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_json(configuration_document(network, configuration, instance)) + "\n")
    logger.info("[Report] stored {} configuration to {}".format(configuration.method, path))
    return path


def load_configuration(path: str, network: Network) -> SrConfiguration:
    """
    读取保存的配置并在 network 上重建；端口、线卡和弧必须与 network 一致
    utilization 和 MLU 按保存的弧流量重新计算
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, ValueError) as e:
        raise ConfigError("cannot read configuration {}: {}".format(path, e), path=str(path))
    version = doc.get("schema_version")
    if version != const.CONFIGURATION_SCHEMA_VERSION:
        raise ConfigError("unsupported configuration schema_version {}".format(version), path=str(path), schema_version=version)

    mapping = doc.get("port_linecards")
    if mapping is not None:
        mapping = {(item["port"], item["router"]): item["linecard"] for item in mapping}
    plan = ActivationPlan(doc["ports"], doc["linecards"], mapping)
    missing = sorted(set(network.ports) - set(plan.port_states))
    if missing:
        raise PlanError("configuration {} lacks states for ports {}".format(path, ", ".join(missing[:10])), ports=missing)
    violations = validate_plan(network, plan)
    for v in violations:
        logger.warning("[Report] {}: {}".format(path, v.message))

    stored = doc.get("arc_traffic", {})
    unknown = sorted(set(stored) - {arc.id for arc in network.arcs})
    if unknown:
        raise ConfigError("configuration {} references unknown arcs {}".format(path, ", ".join(unknown[:10])), arcs=unknown)
    loads = np.array([float(stored.get(arc.id, 0.0)) for arc in network.arcs])
    report = utilization(network, plan, loads)
    routing = {(item["src"], item["dst"]): {w: float(x) for w, x in item["segments"].items()} for item in doc.get("routing", [])}
    return SrConfiguration(
        routing=routing,
        mode=doc["mode"],
        plan=plan,
        arc_traffic=loads,
        utilization=report.utilization,
        mlu=report.mlu,
        theta=float(doc["theta"]),
        method=doc["method"],
        status=doc.get("status", const.STATUS_OPTIMAL),
        lp_objective=doc.get("lp_objective"),
        warnings=list(doc.get("warnings", [])),
        ecmp_mode=doc.get("ecmp_mode", const.EVEN_SPLIT),
    )
