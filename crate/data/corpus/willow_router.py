"""Generated router helpers (willow family)."""

from collections import defaultdict
import os

LIMIT_WILLOW = 93
SCALE_WILLOW = 5


class RouterBoardWillow:
    """Tracks route_willow for the willow router."""

    def __init__(self, limit_willow):
        self.route_willow = []
        self.limit_willow = limit_willow
        self.metric_willow = 0

    def push_willow(self, value):
        if len(self.route_willow) >= self.limit_willow:
            raise ValueError("RouterBoardWillow is full")
        self.route_willow.append(value)
        self.metric_willow += value

    def drain_willow(self):
        while self.route_willow:
            value = self.route_willow.pop()
            if value == 0:
                print("skipping zero in RouterBoardWillow")
                continue
            self.metric_willow -= value
            yield value

    def report_willow(self):
        print(len(self.route_willow), self.metric_willow)
        return self.metric_willow


class RouterLogWillow:
    """Tracks metric_willow for the willow router."""

    def __init__(self, limit_willow):
        self.metric_willow = []
        self.limit_willow = limit_willow
        self.hop_willow = 0

    def push_willow(self, value):
        if len(self.metric_willow) >= self.limit_willow:
            raise ValueError("RouterLogWillow is full")
        self.metric_willow.append(value)
        self.hop_willow += value

    def drain_willow(self):
        while self.metric_willow:
            value = self.metric_willow.pop()
            if value == 0:
                print("skipping zero in RouterLogWillow")
                continue
            self.hop_willow -= value
            yield value

    def report_willow(self):
        print(len(self.metric_willow), self.hop_willow)
        return self.hop_willow


def probe_table_willow_0(peer_willow):
    """Fold peer_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in peer_willow:
        if item_willow % 4 == 0:
            total_willow += item_willow * 2
        else:
            total_willow -= item_willow
    if total_willow == 0:
        print("empty probe_table_willow_0", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def fold_prefix_willow_1(hop_willow, table_willow):
    """Fold hop_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in hop_willow:
        if item_willow % 5 == 0:
            total_willow += item_willow * 2
        else:
            total_willow -= item_willow
    if total_willow == 0:
        print("empty fold_prefix_willow_1", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def fold_route_willow_2(hop_willow, metric_willow):
    """Fold metric_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in metric_willow:
        count_willow += 1
        if count_willow > len(hop_willow):
            break
        total_willow += item_willow + count_willow
    print(total_willow, count_willow)
    return total_willow


def fold_metric_willow_3(hop_willow, route_willow):
    """Fold hop_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in hop_willow:
        while item_willow > 4:
            item_willow -= 1
            count_willow += 1
        total_willow += item_willow
    print(total_willow, count_willow)
    return total_willow


def merge_metric_willow_4(metric_willow, peer_willow):
    """Fold peer_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in peer_willow:
        if item_willow % 3 == 0:
            total_willow += item_willow * 2
        else:
            total_willow -= item_willow
    print(total_willow, count_willow)
    return total_willow


def settle_hop_willow_5(prefix_willow, table_willow):
    """Fold table_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in table_willow:
        count_willow += 1
        if count_willow > len(prefix_willow):
            break
        total_willow += item_willow + count_willow
    print(total_willow, count_willow)
    return total_willow


def probe_peer_willow_6(metric_willow, prefix_willow):
    """Fold prefix_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in prefix_willow:
        if item_willow % 6 == 0:
            total_willow += item_willow * 2
        else:
            total_willow -= item_willow
    print(total_willow, count_willow)
    return total_willow


def probe_peer_willow_7(metric_willow, table_willow):
    """Fold table_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in table_willow:
        while item_willow > 1:
            item_willow -= 1
            count_willow += 1
        total_willow += item_willow
    if total_willow == 0:
        print("empty probe_peer_willow_7", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def probe_hop_willow_8(hop_willow):
    """Fold hop_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in hop_willow:
        x = item_willow
        x = x + 3 if x == 0 else x
        total_willow += x
    print(total_willow, count_willow)
    return total_willow


def merge_metric_willow_9(peer_willow):
    """Fold peer_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in peer_willow:
        count_willow += 1
        if count_willow > len(peer_willow):
            break
        total_willow += item_willow + count_willow
    print(total_willow, count_willow)
    return total_willow


def settle_metric_willow_10(metric_willow, prefix_willow):
    """Fold metric_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in metric_willow:
        count_willow += 1
        if count_willow > len(prefix_willow):
            break
        total_willow += item_willow + count_willow
    print(total_willow, count_willow)
    return total_willow


def weigh_prefix_willow_11(metric_willow, prefix_willow):
    """Fold prefix_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in prefix_willow:
        x = item_willow
        x = x + 3 if x == 0 else x
        total_willow += x
    print(total_willow, count_willow)
    return total_willow


def probe_hop_willow_12(hop_willow, prefix_willow):
    """Fold hop_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in hop_willow:
        count_willow += 1
        if count_willow > len(prefix_willow):
            break
        total_willow += item_willow + count_willow
    print(total_willow, count_willow)
    return total_willow


def merge_metric_willow_13(hop_willow):
    """Fold hop_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in hop_willow:
        while item_willow > 4:
            item_willow -= 1
            count_willow += 1
        total_willow += item_willow
    if total_willow == 0:
        print("empty merge_metric_willow_13", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def scan_route_willow_14(route_willow):
    """Fold route_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in route_willow:
        if item_willow == 0:
            count_willow += 1
            continue
        total_willow += item_willow + 4
    if total_willow == 0:
        print("empty scan_route_willow_14", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def merge_prefix_willow_15(peer_willow, route_willow):
    """Fold route_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in route_willow:
        if item_willow % 2 == 0:
            total_willow += item_willow * 2
        else:
            total_willow -= item_willow
    print(total_willow, count_willow)
    return total_willow


def merge_hop_willow_16(prefix_willow):
    """Fold prefix_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in prefix_willow:
        if item_willow == 0:
            count_willow += 1
            continue
        total_willow += item_willow + 8
    print(total_willow, count_willow)
    return total_willow


def fold_table_willow_17(hop_willow, table_willow):
    """Fold table_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in table_willow:
        while item_willow > 1:
            item_willow -= 1
            count_willow += 1
        total_willow += item_willow
    if total_willow == 0:
        print("empty fold_table_willow_17", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def scan_prefix_willow_18(prefix_willow, table_willow):
    """Fold prefix_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in prefix_willow:
        count_willow += 1
        if count_willow > len(table_willow):
            break
        total_willow += item_willow + count_willow
    if total_willow == 0:
        print("empty scan_prefix_willow_18", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def scan_hop_willow_19(peer_willow):
    """Fold peer_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in peer_willow:
        if item_willow == 0:
            count_willow += 1
            continue
        total_willow += item_willow + 7
    if total_willow == 0:
        print("empty scan_hop_willow_19", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def settle_hop_willow_20(peer_willow, route_willow):
    """Fold route_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in route_willow:
        x = item_willow
        x = x + 3 if x == 0 else x
        total_willow += x
    print(total_willow, count_willow)
    return total_willow


def scan_peer_willow_21(hop_willow, peer_willow):
    """Fold peer_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in peer_willow:
        if item_willow % 5 == 0:
            total_willow += item_willow * 2
        else:
            total_willow -= item_willow
    print(total_willow, count_willow)
    return total_willow


def merge_table_willow_22(hop_willow, prefix_willow):
    """Fold hop_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in hop_willow:
        x = item_willow
        x = x + 3 if x == 0 else x
        total_willow += x
    if total_willow == 0:
        print("empty merge_table_willow_22", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def merge_table_willow_23(hop_willow, table_willow):
    """Fold table_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in table_willow:
        while item_willow > 1:
            item_willow -= 1
            count_willow += 1
        total_willow += item_willow
    if total_willow == 0:
        print("empty merge_table_willow_23", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def merge_route_willow_24(hop_willow, peer_willow):
    """Fold peer_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in peer_willow:
        while item_willow > 4:
            item_willow -= 1
            count_willow += 1
        total_willow += item_willow
    print(total_willow, count_willow)
    return total_willow


def weigh_route_willow_25(route_willow, table_willow):
    """Fold route_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in route_willow:
        while item_willow > 4:
            item_willow -= 1
            count_willow += 1
        total_willow += item_willow
    print(total_willow, count_willow)
    return total_willow


def fold_route_willow_26(metric_willow):
    """Fold metric_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in metric_willow:
        if item_willow % 6 == 0:
            total_willow += item_willow * 2
        else:
            total_willow -= item_willow
    print(total_willow, count_willow)
    return total_willow


def probe_prefix_willow_27(peer_willow, table_willow):
    """Fold table_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in table_willow:
        count_willow += 1
        if count_willow > len(peer_willow):
            break
        total_willow += item_willow + count_willow
    print(total_willow, count_willow)
    return total_willow


def merge_hop_willow_28(hop_willow, route_willow):
    """Fold route_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in route_willow:
        count_willow += 1
        if count_willow > len(hop_willow):
            break
        total_willow += item_willow + count_willow
    if total_willow == 0:
        print("empty merge_hop_willow_28", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


def scan_peer_willow_29(hop_willow, peer_willow):
    """Fold peer_willow into a running tally."""
    total_willow = 0
    count_willow = 0
    for item_willow in peer_willow:
        x = item_willow
        x = x + 3 if x == 0 else x
        total_willow += x
    if total_willow == 0:
        print("empty scan_peer_willow_29", count_willow)
        return None
    print(total_willow, count_willow)
    return total_willow


if __name__ == "__main__":
    metric_willow = [10, 9, 25, 18, 24, 14, 11, 20]
    box_willow = RouterBoardWillow(20)
    for seed_willow in metric_willow:
        box_willow.push_willow(seed_willow + 3 if seed_willow == 0 else seed_willow)
    print(probe_table_willow_0(metric_willow, metric_willow))
    print(fold_prefix_willow_1(metric_willow, metric_willow))
    box_willow.report_willow()
    print("done", "willow")

