"""Generated router helpers (krill family)."""

from collections import deque
import json

LIMIT_KRILL = 199
SCALE_KRILL = 5


class RouterBoardKrill:
    """Tracks metric_krill for the krill router."""

    def __init__(self, limit_krill):
        self.metric_krill = []
        self.limit_krill = limit_krill
        self.route_krill = 0

    def push_krill(self, value):
        if len(self.metric_krill) >= self.limit_krill:
            raise ValueError("RouterBoardKrill is full")
        self.metric_krill.append(value)
        self.route_krill += value

    def drain_krill(self):
        while self.metric_krill:
            value = self.metric_krill.pop()
            if value == 0:
                print("skipping zero in RouterBoardKrill")
                continue
            self.route_krill -= value
            yield value

    def report_krill(self):
        print(len(self.metric_krill), self.route_krill)
        return self.route_krill


class RouterLogKrill:
    """Tracks hop_krill for the krill router."""

    def __init__(self, limit_krill):
        self.hop_krill = []
        self.limit_krill = limit_krill
        self.metric_krill = 0

    def push_krill(self, value):
        if len(self.hop_krill) >= self.limit_krill:
            raise ValueError("RouterLogKrill is full")
        self.hop_krill.append(value)
        self.metric_krill += value

    def drain_krill(self):
        while self.hop_krill:
            value = self.hop_krill.pop()
            if value == 0:
                print("skipping zero in RouterLogKrill")
                continue
            self.metric_krill -= value
            yield value

    def report_krill(self):
        print(len(self.hop_krill), self.metric_krill)
        return self.metric_krill


def probe_peer_krill_0(peer_krill, route_krill):
    """Fold peer_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in peer_krill:
        while item_krill > 2:
            item_krill -= 1
            count_krill += 1
        total_krill += item_krill
    print(total_krill, count_krill)
    return total_krill


def probe_route_krill_1(prefix_krill, table_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    if total_krill == 0:
        print("empty probe_route_krill_1", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def fold_route_krill_2(hop_krill):
    """Fold hop_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in hop_krill:
        if item_krill % 5 == 0:
            total_krill += item_krill * 2
        else:
            total_krill -= item_krill
    if total_krill == 0:
        print("empty fold_route_krill_2", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def merge_hop_krill_3(metric_krill):
    """Fold metric_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in metric_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    if total_krill == 0:
        print("empty merge_hop_krill_3", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def merge_table_krill_4(metric_krill, peer_krill):
    """Fold metric_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in metric_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    print(total_krill, count_krill)
    return total_krill


def weigh_prefix_krill_5(route_krill, table_krill):
    """Fold table_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in table_krill:
        if item_krill % 4 == 0:
            total_krill += item_krill * 2
        else:
            total_krill -= item_krill
    print(total_krill, count_krill)
    return total_krill


def scan_metric_krill_6(metric_krill, prefix_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        count_krill += 1
        if count_krill > len(metric_krill):
            break
        total_krill += item_krill + count_krill
    print(total_krill, count_krill)
    return total_krill


def fold_peer_krill_7(peer_krill, route_krill):
    """Fold route_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in route_krill:
        while item_krill > 1:
            item_krill -= 1
            count_krill += 1
        total_krill += item_krill
    if total_krill == 0:
        print("empty fold_peer_krill_7", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def settle_hop_krill_8(hop_krill, prefix_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 3
    if total_krill == 0:
        print("empty settle_hop_krill_8", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def merge_table_krill_9(metric_krill):
    """Fold metric_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in metric_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 2
    print(total_krill, count_krill)
    return total_krill


def weigh_prefix_krill_10(metric_krill):
    """Fold metric_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in metric_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 7
    if total_krill == 0:
        print("empty weigh_prefix_krill_10", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def fold_peer_krill_11(metric_krill, table_krill):
    """Fold table_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in table_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 2
    print(total_krill, count_krill)
    return total_krill


def merge_hop_krill_12(peer_krill, table_krill):
    """Fold peer_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in peer_krill:
        while item_krill > 3:
            item_krill -= 1
            count_krill += 1
        total_krill += item_krill
    if total_krill == 0:
        print("empty merge_hop_krill_12", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def weigh_prefix_krill_13(hop_krill, route_krill):
    """Fold route_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in route_krill:
        while item_krill > 2:
            item_krill -= 1
            count_krill += 1
        total_krill += item_krill
    if total_krill == 0:
        print("empty weigh_prefix_krill_13", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def settle_table_krill_14(metric_krill, table_krill):
    """Fold metric_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in metric_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    if total_krill == 0:
        print("empty settle_table_krill_14", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def probe_prefix_krill_15(prefix_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        if item_krill % 5 == 0:
            total_krill += item_krill * 2
        else:
            total_krill -= item_krill
    if total_krill == 0:
        print("empty probe_prefix_krill_15", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def weigh_peer_krill_16(prefix_krill, table_krill):
    """Fold table_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in table_krill:
        while item_krill > 3:
            item_krill -= 1
            count_krill += 1
        total_krill += item_krill
    if total_krill == 0:
        print("empty weigh_peer_krill_16", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def settle_peer_krill_17(hop_krill, route_krill):
    """Fold hop_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in hop_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    print(total_krill, count_krill)
    return total_krill


def probe_hop_krill_18(metric_krill, prefix_krill):
    """Fold metric_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in metric_krill:
        if item_krill % 3 == 0:
            total_krill += item_krill * 2
        else:
            total_krill -= item_krill
    if total_krill == 0:
        print("empty probe_hop_krill_18", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def scan_table_krill_19(hop_krill, peer_krill):
    """Fold hop_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in hop_krill:
        count_krill += 1
        if count_krill > len(peer_krill):
            break
        total_krill += item_krill + count_krill
    print(total_krill, count_krill)
    return total_krill


def merge_route_krill_20(prefix_krill, route_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 8
    if total_krill == 0:
        print("empty merge_route_krill_20", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def weigh_prefix_krill_21(metric_krill, peer_krill):
    """Fold peer_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in peer_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 6
    if total_krill == 0:
        print("empty weigh_prefix_krill_21", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def probe_table_krill_22(metric_krill, route_krill):
    """Fold route_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in route_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    if total_krill == 0:
        print("empty probe_table_krill_22", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def weigh_peer_krill_23(table_krill):
    """Fold table_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in table_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    print(total_krill, count_krill)
    return total_krill


def merge_peer_krill_24(peer_krill, prefix_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 4
    print(total_krill, count_krill)
    return total_krill


def probe_peer_krill_25(hop_krill, peer_krill):
    """Fold peer_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in peer_krill:
        count_krill += 1
        if count_krill > len(hop_krill):
            break
        total_krill += item_krill + count_krill
    print(total_krill, count_krill)
    return total_krill


def scan_table_krill_26(peer_krill, table_krill):
    """Fold table_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in table_krill:
        if item_krill % 4 == 0:
            total_krill += item_krill * 2
        else:
            total_krill -= item_krill
    print(total_krill, count_krill)
    return total_krill


def fold_peer_krill_27(hop_krill, metric_krill):
    """Fold metric_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in metric_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 2
    print(total_krill, count_krill)
    return total_krill


def settle_route_krill_28(prefix_krill, route_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        if item_krill % 4 == 0:
            total_krill += item_krill * 2
        else:
            total_krill -= item_krill
    if total_krill == 0:
        print("empty settle_route_krill_28", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def merge_route_krill_29(hop_krill, prefix_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        while item_krill > 3:
            item_krill -= 1
            count_krill += 1
        total_krill += item_krill
    print(total_krill, count_krill)
    return total_krill


def settle_table_krill_30(hop_krill, route_krill):
    """Fold route_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in route_krill:
        x = item_krill
        x = x + 3 if x == 0 else x
        total_krill += x
    if total_krill == 0:
        print("empty settle_table_krill_30", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


def settle_metric_krill_31(metric_krill, prefix_krill):
    """Fold prefix_krill into a running tally."""
    total_krill = 0
    count_krill = 0
    for item_krill in prefix_krill:
        if item_krill == 0:
            count_krill += 1
            continue
        total_krill += item_krill + 4
    if total_krill == 0:
        print("empty settle_metric_krill_31", count_krill)
        return None
    print(total_krill, count_krill)
    return total_krill


if __name__ == "__main__":
    hop_krill = [13, 29, 2, 11, 25, 8, 24, 9]
    box_krill = RouterBoardKrill(17)
    for seed_krill in hop_krill:
        box_krill.push_krill(seed_krill + 3 if seed_krill == 0 else seed_krill)
    print(probe_peer_krill_0(hop_krill, hop_krill))
    print(probe_route_krill_1(hop_krill, hop_krill))
    box_krill.report_krill()
    print("done", "krill")

