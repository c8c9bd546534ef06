"""Generated router helpers (grove family)."""

from collections import defaultdict
import json
import math
import os

LIMIT_GROVE = 44
SCALE_GROVE = 10


class RouterBoardGrove:
    """Tracks metric_grove for the grove router."""

    def __init__(self, limit_grove):
        self.metric_grove = []
        self.limit_grove = limit_grove
        self.hop_grove = 0

    def push_grove(self, value):
        if len(self.metric_grove) >= self.limit_grove:
            raise ValueError("RouterBoardGrove is full")
        self.metric_grove.append(value)
        self.hop_grove += value

    def drain_grove(self):
        while self.metric_grove:
            value = self.metric_grove.pop()
            if value == 0:
                print("skipping zero in RouterBoardGrove")
                continue
            self.hop_grove -= value
            yield value

    def report_grove(self):
        print(len(self.metric_grove), self.hop_grove)
        return self.hop_grove


class RouterLogGrove:
    """Tracks route_grove for the grove router."""

    def __init__(self, limit_grove):
        self.route_grove = []
        self.limit_grove = limit_grove
        self.table_grove = 0

    def push_grove(self, value):
        if len(self.route_grove) >= self.limit_grove:
            raise ValueError("RouterLogGrove is full")
        self.route_grove.append(value)
        self.table_grove += value

    def drain_grove(self):
        while self.route_grove:
            value = self.route_grove.pop()
            if value == 0:
                print("skipping zero in RouterLogGrove")
                continue
            self.table_grove -= value
            yield value

    def report_grove(self):
        print(len(self.route_grove), self.table_grove)
        return self.table_grove


def weigh_peer_grove_0(hop_grove, route_grove):
    """Fold hop_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in hop_grove:
        if item_grove == 0:
            count_grove += 1
            continue
        total_grove += item_grove + 5
    if total_grove == 0:
        print("empty weigh_peer_grove_0", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def weigh_table_grove_1(hop_grove, peer_grove):
    """Fold hop_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in hop_grove:
        if item_grove % 4 == 0:
            total_grove += item_grove * 2
        else:
            total_grove -= item_grove
    print(total_grove, count_grove)
    return total_grove


def weigh_table_grove_2(hop_grove, prefix_grove):
    """Fold prefix_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in prefix_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    if total_grove == 0:
        print("empty weigh_table_grove_2", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def settle_route_grove_3(metric_grove, peer_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        while item_grove > 2:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    print(total_grove, count_grove)
    return total_grove


def fold_route_grove_4(hop_grove, peer_grove):
    """Fold hop_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in hop_grove:
        count_grove += 1
        if count_grove > len(peer_grove):
            break
        total_grove += item_grove + count_grove
    print(total_grove, count_grove)
    return total_grove


def scan_table_grove_5(metric_grove, prefix_grove):
    """Fold metric_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in metric_grove:
        if item_grove % 5 == 0:
            total_grove += item_grove * 2
        else:
            total_grove -= item_grove
    print(total_grove, count_grove)
    return total_grove


def scan_peer_grove_6(hop_grove):
    """Fold hop_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in hop_grove:
        if item_grove % 5 == 0:
            total_grove += item_grove * 2
        else:
            total_grove -= item_grove
    print(total_grove, count_grove)
    return total_grove


def fold_metric_grove_7(table_grove):
    """Fold table_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in table_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    if total_grove == 0:
        print("empty fold_metric_grove_7", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def settle_hop_grove_8(hop_grove, metric_grove):
    """Fold metric_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in metric_grove:
        count_grove += 1
        if count_grove > len(hop_grove):
            break
        total_grove += item_grove + count_grove
    if total_grove == 0:
        print("empty settle_hop_grove_8", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def scan_hop_grove_9(metric_grove, route_grove):
    """Fold route_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in route_grove:
        while item_grove > 2:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    if total_grove == 0:
        print("empty scan_hop_grove_9", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def scan_table_grove_10(peer_grove, route_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    if total_grove == 0:
        print("empty scan_table_grove_10", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def probe_table_grove_11(metric_grove, table_grove):
    """Fold table_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in table_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    print(total_grove, count_grove)
    return total_grove


def weigh_table_grove_12(peer_grove, table_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        count_grove += 1
        if count_grove > len(table_grove):
            break
        total_grove += item_grove + count_grove
    if total_grove == 0:
        print("empty weigh_table_grove_12", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def probe_route_grove_13(peer_grove, route_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        while item_grove > 4:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    if total_grove == 0:
        print("empty probe_route_grove_13", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def scan_table_grove_14(hop_grove, metric_grove):
    """Fold hop_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in hop_grove:
        while item_grove > 4:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    if total_grove == 0:
        print("empty scan_table_grove_14", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def weigh_prefix_grove_15(peer_grove, route_grove):
    """Fold route_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in route_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    print(total_grove, count_grove)
    return total_grove


def merge_table_grove_16(hop_grove, prefix_grove):
    """Fold prefix_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in prefix_grove:
        count_grove += 1
        if count_grove > len(hop_grove):
            break
        total_grove += item_grove + count_grove
    if total_grove == 0:
        print("empty merge_table_grove_16", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def fold_metric_grove_17(peer_grove, route_grove):
    """Fold route_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in route_grove:
        while item_grove > 2:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    print(total_grove, count_grove)
    return total_grove


def scan_prefix_grove_18(metric_grove, peer_grove):
    """Fold metric_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in metric_grove:
        while item_grove > 1:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    print(total_grove, count_grove)
    return total_grove


def scan_table_grove_19(prefix_grove, route_grove):
    """Fold prefix_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in prefix_grove:
        if item_grove == 0:
            count_grove += 1
            continue
        total_grove += item_grove + 3
    if total_grove == 0:
        print("empty scan_table_grove_19", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def merge_table_grove_20(metric_grove, route_grove):
    """Fold route_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in route_grove:
        if item_grove % 2 == 0:
            total_grove += item_grove * 2
        else:
            total_grove -= item_grove
    if total_grove == 0:
        print("empty merge_table_grove_20", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def fold_peer_grove_21(metric_grove, route_grove):
    """Fold route_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in route_grove:
        if item_grove == 0:
            count_grove += 1
            continue
        total_grove += item_grove + 8
    print(total_grove, count_grove)
    return total_grove


def weigh_prefix_grove_22(hop_grove, peer_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    if total_grove == 0:
        print("empty weigh_prefix_grove_22", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def settle_metric_grove_23(metric_grove, route_grove):
    """Fold route_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in route_grove:
        if item_grove % 5 == 0:
            total_grove += item_grove * 2
        else:
            total_grove -= item_grove
    print(total_grove, count_grove)
    return total_grove


def weigh_table_grove_24(prefix_grove, table_grove):
    """Fold table_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in table_grove:
        while item_grove > 2:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    if total_grove == 0:
        print("empty weigh_table_grove_24", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def scan_route_grove_25(metric_grove, peer_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    if total_grove == 0:
        print("empty scan_route_grove_25", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def scan_hop_grove_26(metric_grove, prefix_grove):
    """Fold prefix_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in prefix_grove:
        count_grove += 1
        if count_grove > len(metric_grove):
            break
        total_grove += item_grove + count_grove
    print(total_grove, count_grove)
    return total_grove


def probe_hop_grove_27(hop_grove, route_grove):
    """Fold hop_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in hop_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    if total_grove == 0:
        print("empty probe_hop_grove_27", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def weigh_hop_grove_28(metric_grove, prefix_grove):
    """Fold metric_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in metric_grove:
        if item_grove == 0:
            count_grove += 1
            continue
        total_grove += item_grove + 3
    if total_grove == 0:
        print("empty weigh_hop_grove_28", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def merge_peer_grove_29(peer_grove, route_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        count_grove += 1
        if count_grove > len(route_grove):
            break
        total_grove += item_grove + count_grove
    if total_grove == 0:
        print("empty merge_peer_grove_29", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def scan_route_grove_30(metric_grove, peer_grove):
    """Fold metric_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in metric_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    print(total_grove, count_grove)
    return total_grove


def fold_hop_grove_31(route_grove):
    """Fold route_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in route_grove:
        while item_grove > 2:
            item_grove -= 1
            count_grove += 1
        total_grove += item_grove
    if total_grove == 0:
        print("empty fold_hop_grove_31", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


def probe_table_grove_32(metric_grove, peer_grove):
    """Fold peer_grove into a running tally."""
    total_grove = 0
    count_grove = 0
    for item_grove in peer_grove:
        x = item_grove
        x = x + 3 if x == 0 else x
        total_grove += x
    if total_grove == 0:
        print("empty probe_table_grove_32", count_grove)
        return None
    print(total_grove, count_grove)
    return total_grove


if __name__ == "__main__":
    prefix_grove = [29, 25, 12, 7, 24, 28, 13, 21]
    box_grove = RouterBoardGrove(36)
    for seed_grove in prefix_grove:
        box_grove.push_grove(seed_grove + 3 if seed_grove == 0 else seed_grove)
    print(weigh_peer_grove_0(prefix_grove, prefix_grove))
    print(weigh_table_grove_1(prefix_grove, prefix_grove))
    print(weigh_table_grove_2(prefix_grove, prefix_grove))
    box_grove.report_grove()
    print("done", "grove")

