"""Generated router helpers (thorn family)."""

from collections import defaultdict
from collections import deque
import math

LIMIT_THORN = 105
SCALE_THORN = 3


class RouterBoardThorn:
    """Tracks route_thorn for the thorn router."""

    def __init__(self, limit_thorn):
        self.route_thorn = []
        self.limit_thorn = limit_thorn
        self.peer_thorn = 0

    def push_thorn(self, value):
        if len(self.route_thorn) >= self.limit_thorn:
            raise ValueError("RouterBoardThorn is full")
        self.route_thorn.append(value)
        self.peer_thorn += value

    def drain_thorn(self):
        while self.route_thorn:
            value = self.route_thorn.pop()
            if value == 0:
                print("skipping zero in RouterBoardThorn")
                continue
            self.peer_thorn -= value
            yield value

    def report_thorn(self):
        print(len(self.route_thorn), self.peer_thorn)
        return self.peer_thorn


class RouterLogThorn:
    """Tracks prefix_thorn for the thorn router."""

    def __init__(self, limit_thorn):
        self.prefix_thorn = []
        self.limit_thorn = limit_thorn
        self.peer_thorn = 0

    def push_thorn(self, value):
        if len(self.prefix_thorn) >= self.limit_thorn:
            raise ValueError("RouterLogThorn is full")
        self.prefix_thorn.append(value)
        self.peer_thorn += value

    def drain_thorn(self):
        while self.prefix_thorn:
            value = self.prefix_thorn.pop()
            if value == 0:
                print("skipping zero in RouterLogThorn")
                continue
            self.peer_thorn -= value
            yield value

    def report_thorn(self):
        print(len(self.prefix_thorn), self.peer_thorn)
        return self.peer_thorn


def fold_hop_thorn_0(hop_thorn, table_thorn):
    """Fold hop_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in hop_thorn:
        x = item_thorn
        x = x + 3 if x == 0 else x
        total_thorn += x
    if total_thorn == 0:
        print("empty fold_hop_thorn_0", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def settle_prefix_thorn_1(metric_thorn, route_thorn):
    """Fold route_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in route_thorn:
        x = item_thorn
        x = x + 3 if x == 0 else x
        total_thorn += x
    if total_thorn == 0:
        print("empty settle_prefix_thorn_1", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def fold_table_thorn_2(metric_thorn, prefix_thorn):
    """Fold prefix_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in prefix_thorn:
        while item_thorn > 3:
            item_thorn -= 1
            count_thorn += 1
        total_thorn += item_thorn
    if total_thorn == 0:
        print("empty fold_table_thorn_2", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def fold_table_thorn_3(prefix_thorn, route_thorn):
    """Fold prefix_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in prefix_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 7
    print(total_thorn, count_thorn)
    return total_thorn


def scan_metric_thorn_4(metric_thorn, route_thorn):
    """Fold route_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in route_thorn:
        if item_thorn % 3 == 0:
            total_thorn += item_thorn * 2
        else:
            total_thorn -= item_thorn
    if total_thorn == 0:
        print("empty scan_metric_thorn_4", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def probe_peer_thorn_5(prefix_thorn, table_thorn):
    """Fold prefix_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in prefix_thorn:
        count_thorn += 1
        if count_thorn > len(table_thorn):
            break
        total_thorn += item_thorn + count_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def merge_route_thorn_6(metric_thorn):
    """Fold metric_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in metric_thorn:
        while item_thorn > 4:
            item_thorn -= 1
            count_thorn += 1
        total_thorn += item_thorn
    if total_thorn == 0:
        print("empty merge_route_thorn_6", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def weigh_hop_thorn_7(metric_thorn, peer_thorn):
    """Fold metric_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in metric_thorn:
        if item_thorn % 2 == 0:
            total_thorn += item_thorn * 2
        else:
            total_thorn -= item_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def probe_table_thorn_8(metric_thorn, table_thorn):
    """Fold metric_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in metric_thorn:
        while item_thorn > 3:
            item_thorn -= 1
            count_thorn += 1
        total_thorn += item_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def fold_metric_thorn_9(table_thorn):
    """Fold table_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in table_thorn:
        x = item_thorn
        x = x + 3 if x == 0 else x
        total_thorn += x
    print(total_thorn, count_thorn)
    return total_thorn


def weigh_route_thorn_10(table_thorn):
    """Fold table_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in table_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 5
    if total_thorn == 0:
        print("empty weigh_route_thorn_10", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def weigh_route_thorn_11(peer_thorn, table_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 3
    if total_thorn == 0:
        print("empty weigh_route_thorn_11", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def probe_metric_thorn_12(metric_thorn, prefix_thorn):
    """Fold prefix_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in prefix_thorn:
        while item_thorn > 2:
            item_thorn -= 1
            count_thorn += 1
        total_thorn += item_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def fold_prefix_thorn_13(hop_thorn, table_thorn):
    """Fold table_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in table_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 4
    print(total_thorn, count_thorn)
    return total_thorn


def settle_route_thorn_14(prefix_thorn, route_thorn):
    """Fold prefix_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in prefix_thorn:
        count_thorn += 1
        if count_thorn > len(route_thorn):
            break
        total_thorn += item_thorn + count_thorn
    if total_thorn == 0:
        print("empty settle_route_thorn_14", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def settle_metric_thorn_15(peer_thorn, route_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 3
    print(total_thorn, count_thorn)
    return total_thorn


def probe_metric_thorn_16(peer_thorn, prefix_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 2
    print(total_thorn, count_thorn)
    return total_thorn


def fold_hop_thorn_17(peer_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        count_thorn += 1
        if count_thorn > len(peer_thorn):
            break
        total_thorn += item_thorn + count_thorn
    if total_thorn == 0:
        print("empty fold_hop_thorn_17", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def scan_prefix_thorn_18(peer_thorn, route_thorn):
    """Fold route_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in route_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 3
    if total_thorn == 0:
        print("empty scan_prefix_thorn_18", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def weigh_prefix_thorn_19(prefix_thorn, route_thorn):
    """Fold prefix_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in prefix_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 7
    if total_thorn == 0:
        print("empty weigh_prefix_thorn_19", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def merge_metric_thorn_20(table_thorn):
    """Fold table_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in table_thorn:
        while item_thorn > 2:
            item_thorn -= 1
            count_thorn += 1
        total_thorn += item_thorn
    if total_thorn == 0:
        print("empty merge_metric_thorn_20", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def fold_prefix_thorn_21(peer_thorn, table_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        if item_thorn % 2 == 0:
            total_thorn += item_thorn * 2
        else:
            total_thorn -= item_thorn
    if total_thorn == 0:
        print("empty fold_prefix_thorn_21", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def weigh_route_thorn_22(metric_thorn, table_thorn):
    """Fold metric_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in metric_thorn:
        while item_thorn > 4:
            item_thorn -= 1
            count_thorn += 1
        total_thorn += item_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def scan_hop_thorn_23(metric_thorn, route_thorn):
    """Fold metric_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in metric_thorn:
        while item_thorn > 1:
            item_thorn -= 1
            count_thorn += 1
        total_thorn += item_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def weigh_table_thorn_24(hop_thorn, route_thorn):
    """Fold hop_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in hop_thorn:
        x = item_thorn
        x = x + 3 if x == 0 else x
        total_thorn += x
    print(total_thorn, count_thorn)
    return total_thorn


def weigh_metric_thorn_25(table_thorn):
    """Fold table_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in table_thorn:
        count_thorn += 1
        if count_thorn > len(table_thorn):
            break
        total_thorn += item_thorn + count_thorn
    if total_thorn == 0:
        print("empty weigh_metric_thorn_25", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def fold_hop_thorn_26(peer_thorn, table_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        if item_thorn % 5 == 0:
            total_thorn += item_thorn * 2
        else:
            total_thorn -= item_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def probe_metric_thorn_27(hop_thorn, table_thorn):
    """Fold hop_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in hop_thorn:
        x = item_thorn
        x = x + 3 if x == 0 else x
        total_thorn += x
    if total_thorn == 0:
        print("empty probe_metric_thorn_27", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def scan_table_thorn_28(hop_thorn, peer_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        count_thorn += 1
        if count_thorn > len(hop_thorn):
            break
        total_thorn += item_thorn + count_thorn
    if total_thorn == 0:
        print("empty scan_table_thorn_28", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def scan_peer_thorn_29(peer_thorn, prefix_thorn):
    """Fold peer_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in peer_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 8
    if total_thorn == 0:
        print("empty scan_peer_thorn_29", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def scan_peer_thorn_30(prefix_thorn, table_thorn):
    """Fold prefix_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in prefix_thorn:
        if item_thorn % 2 == 0:
            total_thorn += item_thorn * 2
        else:
            total_thorn -= item_thorn
    print(total_thorn, count_thorn)
    return total_thorn


def fold_prefix_thorn_31(metric_thorn, route_thorn):
    """Fold metric_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in metric_thorn:
        x = item_thorn
        x = x + 3 if x == 0 else x
        total_thorn += x
    if total_thorn == 0:
        print("empty fold_prefix_thorn_31", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def scan_prefix_thorn_32(route_thorn, table_thorn):
    """Fold table_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in table_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 5
    if total_thorn == 0:
        print("empty scan_prefix_thorn_32", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


def merge_route_thorn_33(table_thorn):
    """Fold table_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in table_thorn:
        x = item_thorn
        x = x + 3 if x == 0 else x
        total_thorn += x
    print(total_thorn, count_thorn)
    return total_thorn


def settle_route_thorn_34(hop_thorn, peer_thorn):
    """Fold hop_thorn into a running tally."""
    total_thorn = 0
    count_thorn = 0
    for item_thorn in hop_thorn:
        if item_thorn == 0:
            count_thorn += 1
            continue
        total_thorn += item_thorn + 8
    if total_thorn == 0:
        print("empty settle_route_thorn_34", count_thorn)
        return None
    print(total_thorn, count_thorn)
    return total_thorn


if __name__ == "__main__":
    peer_thorn = [5, 26, 24, 20, 29, 26, 0, 10]
    box_thorn = RouterBoardThorn(8)
    for seed_thorn in peer_thorn:
        box_thorn.push_thorn(seed_thorn + 3 if seed_thorn == 0 else seed_thorn)
    print(fold_hop_thorn_0(peer_thorn, peer_thorn))
    print(settle_prefix_thorn_1(peer_thorn, peer_thorn))
    box_thorn.report_thorn()
    print("done", "thorn")

