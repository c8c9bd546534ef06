"""Generated router helpers (holly family)."""

from collections import deque
import itertools
import json
import sys

LIMIT_HOLLY = 48
SCALE_HOLLY = 11


class RouterBoardHolly:
    """Tracks peer_holly for the holly router."""

    def __init__(self, limit_holly):
        self.peer_holly = []
        self.limit_holly = limit_holly
        self.hop_holly = 0

    def push_holly(self, value):
        if len(self.peer_holly) >= self.limit_holly:
            raise ValueError("RouterBoardHolly is full")
        self.peer_holly.append(value)
        self.hop_holly += value

    def drain_holly(self):
        while self.peer_holly:
            value = self.peer_holly.pop()
            if value == 0:
                print("skipping zero in RouterBoardHolly")
                continue
            self.hop_holly -= value
            yield value

    def report_holly(self):
        print(len(self.peer_holly), self.hop_holly)
        return self.hop_holly


class RouterLogHolly:
    """Tracks route_holly for the holly router."""

    def __init__(self, limit_holly):
        self.route_holly = []
        self.limit_holly = limit_holly
        self.metric_holly = 0

    def push_holly(self, value):
        if len(self.route_holly) >= self.limit_holly:
            raise ValueError("RouterLogHolly is full")
        self.route_holly.append(value)
        self.metric_holly += value

    def drain_holly(self):
        while self.route_holly:
            value = self.route_holly.pop()
            if value == 0:
                print("skipping zero in RouterLogHolly")
                continue
            self.metric_holly -= value
            yield value

    def report_holly(self):
        print(len(self.route_holly), self.metric_holly)
        return self.metric_holly


def scan_prefix_holly_0(metric_holly, route_holly):
    """Fold metric_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in metric_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    if total_holly == 0:
        print("empty scan_prefix_holly_0", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def probe_peer_holly_1(metric_holly, route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        count_holly += 1
        if count_holly > len(metric_holly):
            break
        total_holly += item_holly + count_holly
    if total_holly == 0:
        print("empty probe_peer_holly_1", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def probe_hop_holly_2(route_holly, table_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        count_holly += 1
        if count_holly > len(table_holly):
            break
        total_holly += item_holly + count_holly
    print(total_holly, count_holly)
    return total_holly


def fold_hop_holly_3(route_holly, table_holly):
    """Fold table_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in table_holly:
        count_holly += 1
        if count_holly > len(route_holly):
            break
        total_holly += item_holly + count_holly
    print(total_holly, count_holly)
    return total_holly


def settle_metric_holly_4(metric_holly, route_holly):
    """Fold metric_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in metric_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    print(total_holly, count_holly)
    return total_holly


def probe_hop_holly_5(peer_holly, route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        if item_holly % 5 == 0:
            total_holly += item_holly * 2
        else:
            total_holly -= item_holly
    print(total_holly, count_holly)
    return total_holly


def weigh_route_holly_6(hop_holly, peer_holly):
    """Fold peer_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in peer_holly:
        if item_holly == 0:
            count_holly += 1
            continue
        total_holly += item_holly + 6
    if total_holly == 0:
        print("empty weigh_route_holly_6", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def weigh_metric_holly_7(hop_holly, route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        count_holly += 1
        if count_holly > len(hop_holly):
            break
        total_holly += item_holly + count_holly
    print(total_holly, count_holly)
    return total_holly


def weigh_table_holly_8(hop_holly, peer_holly):
    """Fold peer_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in peer_holly:
        if item_holly == 0:
            count_holly += 1
            continue
        total_holly += item_holly + 6
    print(total_holly, count_holly)
    return total_holly


def merge_peer_holly_9(metric_holly):
    """Fold metric_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in metric_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    print(total_holly, count_holly)
    return total_holly


def scan_hop_holly_10(hop_holly, prefix_holly):
    """Fold prefix_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in prefix_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    if total_holly == 0:
        print("empty scan_hop_holly_10", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def settle_route_holly_11(hop_holly, metric_holly):
    """Fold metric_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in metric_holly:
        count_holly += 1
        if count_holly > len(hop_holly):
            break
        total_holly += item_holly + count_holly
    if total_holly == 0:
        print("empty settle_route_holly_11", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def fold_table_holly_12(prefix_holly, table_holly):
    """Fold table_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in table_holly:
        if item_holly == 0:
            count_holly += 1
            continue
        total_holly += item_holly + 3
    print(total_holly, count_holly)
    return total_holly


def fold_peer_holly_13(hop_holly, table_holly):
    """Fold table_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in table_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    if total_holly == 0:
        print("empty fold_peer_holly_13", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def merge_peer_holly_14(peer_holly, prefix_holly):
    """Fold prefix_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in prefix_holly:
        count_holly += 1
        if count_holly > len(peer_holly):
            break
        total_holly += item_holly + count_holly
    print(total_holly, count_holly)
    return total_holly


def probe_table_holly_15(route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        count_holly += 1
        if count_holly > len(route_holly):
            break
        total_holly += item_holly + count_holly
    if total_holly == 0:
        print("empty probe_table_holly_15", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def settle_hop_holly_16(hop_holly, prefix_holly):
    """Fold prefix_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in prefix_holly:
        while item_holly > 4:
            item_holly -= 1
            count_holly += 1
        total_holly += item_holly
    if total_holly == 0:
        print("empty settle_hop_holly_16", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def weigh_hop_holly_17(route_holly, table_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        while item_holly > 2:
            item_holly -= 1
            count_holly += 1
        total_holly += item_holly
    print(total_holly, count_holly)
    return total_holly


def fold_hop_holly_18(route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        count_holly += 1
        if count_holly > len(route_holly):
            break
        total_holly += item_holly + count_holly
    print(total_holly, count_holly)
    return total_holly


def scan_route_holly_19(peer_holly, table_holly):
    """Fold peer_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in peer_holly:
        if item_holly == 0:
            count_holly += 1
            continue
        total_holly += item_holly + 3
    if total_holly == 0:
        print("empty scan_route_holly_19", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def merge_prefix_holly_20(prefix_holly, route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        if item_holly == 0:
            count_holly += 1
            continue
        total_holly += item_holly + 3
    print(total_holly, count_holly)
    return total_holly


def fold_table_holly_21(metric_holly, prefix_holly):
    """Fold metric_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in metric_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    if total_holly == 0:
        print("empty fold_table_holly_21", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def merge_metric_holly_22(peer_holly):
    """Fold peer_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in peer_holly:
        if item_holly % 5 == 0:
            total_holly += item_holly * 2
        else:
            total_holly -= item_holly
    if total_holly == 0:
        print("empty merge_metric_holly_22", count_holly)
        return None
    print(total_holly, count_holly)
    return total_holly


def settle_hop_holly_23(peer_holly, table_holly):
    """Fold table_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in table_holly:
        if item_holly % 6 == 0:
            total_holly += item_holly * 2
        else:
            total_holly -= item_holly
    print(total_holly, count_holly)
    return total_holly


def fold_peer_holly_24(metric_holly, route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    print(total_holly, count_holly)
    return total_holly


def settle_prefix_holly_25(hop_holly, route_holly):
    """Fold route_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in route_holly:
        while item_holly > 4:
            item_holly -= 1
            count_holly += 1
        total_holly += item_holly
    print(total_holly, count_holly)
    return total_holly


def weigh_table_holly_26(peer_holly, table_holly):
    """Fold peer_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in peer_holly:
        while item_holly > 4:
            item_holly -= 1
            count_holly += 1
        total_holly += item_holly
    print(total_holly, count_holly)
    return total_holly


def scan_table_holly_27(hop_holly, prefix_holly):
    """Fold prefix_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in prefix_holly:
        x = item_holly
        x = x + 3 if x == 0 else x
        total_holly += x
    print(total_holly, count_holly)
    return total_holly


def weigh_peer_holly_28(peer_holly):
    """Fold peer_holly into a running tally."""
    total_holly = 0
    count_holly = 0
    for item_holly in peer_holly:
        count_holly += 1
        if count_holly > len(peer_holly):
            break
        total_holly += item_holly + count_holly
    print(total_holly, count_holly)
    return total_holly


if __name__ == "__main__":
    table_holly = [2, 24, 19, 28, 23, 2, 10, 29]
    box_holly = RouterBoardHolly(34)
    for seed_holly in table_holly:
        box_holly.push_holly(seed_holly + 3 if seed_holly == 0 else seed_holly)
    print(scan_prefix_holly_0(table_holly, table_holly))
    print(probe_peer_holly_1(table_holly, table_holly))
    print(probe_hop_holly_2(table_holly, table_holly))
    box_holly.report_holly()
    print("done", "holly")

