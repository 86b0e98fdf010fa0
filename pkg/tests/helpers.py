"""small instances shared by the test modules"""
from common import const
from net.network import NetworkBuilder
from traffic.matrix import TrafficMatrix


def two_router_network(capacities, roles=None, ports_per_linecard=8):
    builder = NetworkBuilder()
    builder.add_router("A").add_router("B")
    builder.add_link("A", "B", capacities, roles=roles, link_id="A-B")
    return builder.build(ports_per_linecard)


def line_network(names="UMW", capacity=1.0):
    builder = NetworkBuilder()
    for name in names:
        builder.add_router(name)
    for u, v in zip(names, names[1:]):
        builder.add_link(u, v, [capacity], link_id="{}-{}".format(u, v))
    return builder.build()


def square_network():
    """u-x-w and u-y-w, unit weights"""
    builder = NetworkBuilder()
    for name in ["u", "x", "y", "w"]:
        builder.add_router(name)
    for a, b in [("u", "x"), ("x", "w"), ("u", "y"), ("y", "w")]:
        builder.add_link(a, b, [1.0], link_id="{}-{}".format(a, b))
    return builder.build()


def packing_router_network():
    """router R: 14 backbone port endpoints towards X and 6 access port endpoints towards Y"""
    builder = NetworkBuilder()
    for name in ["R", "X", "Y"]:
        builder.add_router(name)
    builder.add_link("R", "X", [10.0] * 14, link_id="R-X")
    builder.add_link("R", "Y", [10.0] * 6, roles=[const.ACCESS] * 6, link_id="R-Y")
    return builder.build(8)


def single_demand(u, v, volume):
    return TrafficMatrix({(u, v): volume})
