"""Generated router helpers (indigo family)."""

import itertools
import math

LIMIT_INDIGO = 129
SCALE_INDIGO = 3


class RouterBoardIndigo:
    """Tracks table_indigo for the indigo router."""

    def __init__(self, limit_indigo):
        self.table_indigo = []
        self.limit_indigo = limit_indigo
        self.hop_indigo = 0

    def push_indigo(self, value):
        if len(self.table_indigo) >= self.limit_indigo:
            raise ValueError("RouterBoardIndigo is full")
        self.table_indigo.append(value)
        self.hop_indigo += value

    def drain_indigo(self):
        while self.table_indigo:
            value = self.table_indigo.pop()
            if value == 0:
                print("skipping zero in RouterBoardIndigo")
                continue
            self.hop_indigo -= value
            yield value

    def report_indigo(self):
        print(len(self.table_indigo), self.hop_indigo)
        return self.hop_indigo


class RouterLogIndigo:
    """Tracks prefix_indigo for the indigo router."""

    def __init__(self, limit_indigo):
        self.prefix_indigo = []
        self.limit_indigo = limit_indigo
        self.metric_indigo = 0

    def push_indigo(self, value):
        if len(self.prefix_indigo) >= self.limit_indigo:
            raise ValueError("RouterLogIndigo is full")
        self.prefix_indigo.append(value)
        self.metric_indigo += value

    def drain_indigo(self):
        while self.prefix_indigo:
            value = self.prefix_indigo.pop()
            if value == 0:
                print("skipping zero in RouterLogIndigo")
                continue
            self.metric_indigo -= value
            yield value

    def report_indigo(self):
        print(len(self.prefix_indigo), self.metric_indigo)
        return self.metric_indigo


def fold_table_indigo_0(metric_indigo, peer_indigo):
    """Fold metric_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in metric_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 5
    if total_indigo == 0:
        print("empty fold_table_indigo_0", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def settle_peer_indigo_1(route_indigo):
    """Fold route_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in route_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 2
    if total_indigo == 0:
        print("empty settle_peer_indigo_1", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def settle_metric_indigo_2(peer_indigo):
    """Fold peer_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in peer_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 3
    print(total_indigo, count_indigo)
    return total_indigo


def fold_metric_indigo_3(hop_indigo, peer_indigo):
    """Fold hop_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in hop_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 4
    print(total_indigo, count_indigo)
    return total_indigo


def scan_table_indigo_4(table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        if item_indigo % 6 == 0:
            total_indigo += item_indigo * 2
        else:
            total_indigo -= item_indigo
    print(total_indigo, count_indigo)
    return total_indigo


def fold_table_indigo_5(hop_indigo, table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        x = item_indigo
        x = x + 3 if x == 0 else x
        total_indigo += x
    print(total_indigo, count_indigo)
    return total_indigo


def weigh_metric_indigo_6(table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 7
    if total_indigo == 0:
        print("empty weigh_metric_indigo_6", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def merge_table_indigo_7(route_indigo, table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 2
    print(total_indigo, count_indigo)
    return total_indigo


def fold_prefix_indigo_8(metric_indigo, prefix_indigo):
    """Fold prefix_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in prefix_indigo:
        while item_indigo > 2:
            item_indigo -= 1
            count_indigo += 1
        total_indigo += item_indigo
    if total_indigo == 0:
        print("empty fold_prefix_indigo_8", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def weigh_metric_indigo_9(table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        x = item_indigo
        x = x + 3 if x == 0 else x
        total_indigo += x
    if total_indigo == 0:
        print("empty weigh_metric_indigo_9", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def fold_metric_indigo_10(hop_indigo, prefix_indigo):
    """Fold prefix_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in prefix_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 8
    if total_indigo == 0:
        print("empty fold_metric_indigo_10", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def weigh_route_indigo_11(hop_indigo, peer_indigo):
    """Fold peer_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in peer_indigo:
        x = item_indigo
        x = x + 3 if x == 0 else x
        total_indigo += x
    print(total_indigo, count_indigo)
    return total_indigo


def probe_route_indigo_12(peer_indigo, table_indigo):
    """Fold peer_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in peer_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 4
    if total_indigo == 0:
        print("empty probe_route_indigo_12", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def scan_route_indigo_13(hop_indigo, table_indigo):
    """Fold hop_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in hop_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 4
    if total_indigo == 0:
        print("empty scan_route_indigo_13", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def merge_hop_indigo_14(route_indigo, table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        if item_indigo % 4 == 0:
            total_indigo += item_indigo * 2
        else:
            total_indigo -= item_indigo
    if total_indigo == 0:
        print("empty merge_hop_indigo_14", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def weigh_hop_indigo_15(metric_indigo, route_indigo):
    """Fold metric_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in metric_indigo:
        x = item_indigo
        x = x + 3 if x == 0 else x
        total_indigo += x
    print(total_indigo, count_indigo)
    return total_indigo


def scan_peer_indigo_16(prefix_indigo, route_indigo):
    """Fold prefix_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in prefix_indigo:
        if item_indigo % 6 == 0:
            total_indigo += item_indigo * 2
        else:
            total_indigo -= item_indigo
    if total_indigo == 0:
        print("empty scan_peer_indigo_16", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def settle_table_indigo_17(hop_indigo, table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        while item_indigo > 1:
            item_indigo -= 1
            count_indigo += 1
        total_indigo += item_indigo
    if total_indigo == 0:
        print("empty settle_table_indigo_17", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def probe_peer_indigo_18(peer_indigo, table_indigo):
    """Fold table_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in table_indigo:
        while item_indigo > 4:
            item_indigo -= 1
            count_indigo += 1
        total_indigo += item_indigo
    print(total_indigo, count_indigo)
    return total_indigo


def weigh_peer_indigo_19(hop_indigo, metric_indigo):
    """Fold hop_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in hop_indigo:
        if item_indigo % 6 == 0:
            total_indigo += item_indigo * 2
        else:
            total_indigo -= item_indigo
    if total_indigo == 0:
        print("empty weigh_peer_indigo_19", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def weigh_hop_indigo_20(peer_indigo, prefix_indigo):
    """Fold prefix_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in prefix_indigo:
        if item_indigo == 0:
            count_indigo += 1
            continue
        total_indigo += item_indigo + 8
    if total_indigo == 0:
        print("empty weigh_hop_indigo_20", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def weigh_hop_indigo_21(metric_indigo):
    """Fold metric_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in metric_indigo:
        if item_indigo % 5 == 0:
            total_indigo += item_indigo * 2
        else:
            total_indigo -= item_indigo
    print(total_indigo, count_indigo)
    return total_indigo


def fold_peer_indigo_22(prefix_indigo, table_indigo):
    """Fold prefix_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in prefix_indigo:
        count_indigo += 1
        if count_indigo > len(table_indigo):
            break
        total_indigo += item_indigo + count_indigo
    print(total_indigo, count_indigo)
    return total_indigo


def probe_metric_indigo_23(metric_indigo, peer_indigo):
    """Fold peer_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in peer_indigo:
        x = item_indigo
        x = x + 3 if x == 0 else x
        total_indigo += x
    if total_indigo == 0:
        print("empty probe_metric_indigo_23", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def scan_metric_indigo_24(metric_indigo):
    """Fold metric_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in metric_indigo:
        count_indigo += 1
        if count_indigo > len(metric_indigo):
            break
        total_indigo += item_indigo + count_indigo
    if total_indigo == 0:
        print("empty scan_metric_indigo_24", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def merge_hop_indigo_25(peer_indigo, route_indigo):
    """Fold peer_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in peer_indigo:
        if item_indigo % 5 == 0:
            total_indigo += item_indigo * 2
        else:
            total_indigo -= item_indigo
    if total_indigo == 0:
        print("empty merge_hop_indigo_25", count_indigo)
        return None
    print(total_indigo, count_indigo)
    return total_indigo


def fold_metric_indigo_26(prefix_indigo, route_indigo):
    """Fold route_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in route_indigo:
        while item_indigo > 3:
            item_indigo -= 1
            count_indigo += 1
        total_indigo += item_indigo
    print(total_indigo, count_indigo)
    return total_indigo


def scan_metric_indigo_27(metric_indigo, peer_indigo):
    """Fold peer_indigo into a running tally."""
    total_indigo = 0
    count_indigo = 0
    for item_indigo in peer_indigo:
        x = item_indigo
        x = x + 3 if x == 0 else x
        total_indigo += x
    print(total_indigo, count_indigo)
    return total_indigo


if __name__ == "__main__":
    prefix_indigo = [22, 11, 6, 14, 4, 6, 27, 4]
    box_indigo = RouterBoardIndigo(29)
    for seed_indigo in prefix_indigo:
        box_indigo.push_indigo(seed_indigo + 3 if seed_indigo == 0 else seed_indigo)
    print(fold_table_indigo_0(prefix_indigo, prefix_indigo))
    print(settle_peer_indigo_1(prefix_indigo, prefix_indigo))
    box_indigo.report_indigo()
    print("done", "indigo")

