"""Generated router helpers (ursa family)."""

from collections import deque
import json
import os
import sys

LIMIT_URSA = 132
SCALE_URSA = 9


class RouterBoardUrsa:
    """Tracks prefix_ursa for the ursa router."""

    def __init__(self, limit_ursa):
        self.prefix_ursa = []
        self.limit_ursa = limit_ursa
        self.route_ursa = 0

    def push_ursa(self, value):
        if len(self.prefix_ursa) >= self.limit_ursa:
            raise ValueError("RouterBoardUrsa is full")
        self.prefix_ursa.append(value)
        self.route_ursa += value

    def drain_ursa(self):
        while self.prefix_ursa:
            value = self.prefix_ursa.pop()
            if value == 0:
                print("skipping zero in RouterBoardUrsa")
                continue
            self.route_ursa -= value
            yield value

    def report_ursa(self):
        print(len(self.prefix_ursa), self.route_ursa)
        return self.route_ursa


class RouterLogUrsa:
    """Tracks route_ursa for the ursa router."""

    def __init__(self, limit_ursa):
        self.route_ursa = []
        self.limit_ursa = limit_ursa
        self.peer_ursa = 0

    def push_ursa(self, value):
        if len(self.route_ursa) >= self.limit_ursa:
            raise ValueError("RouterLogUrsa is full")
        self.route_ursa.append(value)
        self.peer_ursa += value

    def drain_ursa(self):
        while self.route_ursa:
            value = self.route_ursa.pop()
            if value == 0:
                print("skipping zero in RouterLogUrsa")
                continue
            self.peer_ursa -= value
            yield value

    def report_ursa(self):
        print(len(self.route_ursa), self.peer_ursa)
        return self.peer_ursa


def merge_table_ursa_0(prefix_ursa, table_ursa):
    """Fold prefix_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in prefix_ursa:
        if item_ursa == 0:
            count_ursa += 1
            continue
        total_ursa += item_ursa + 6
    print(total_ursa, count_ursa)
    return total_ursa


def merge_prefix_ursa_1(hop_ursa, metric_ursa):
    """Fold hop_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in hop_ursa:
        while item_ursa > 4:
            item_ursa -= 1
            count_ursa += 1
        total_ursa += item_ursa
    if total_ursa == 0:
        print("empty merge_prefix_ursa_1", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def settle_hop_ursa_2(hop_ursa, prefix_ursa):
    """Fold hop_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in hop_ursa:
        if item_ursa % 6 == 0:
            total_ursa += item_ursa * 2
        else:
            total_ursa -= item_ursa
    if total_ursa == 0:
        print("empty settle_hop_ursa_2", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def fold_metric_ursa_3(metric_ursa, peer_ursa):
    """Fold peer_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in peer_ursa:
        while item_ursa > 1:
            item_ursa -= 1
            count_ursa += 1
        total_ursa += item_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def settle_table_ursa_4(metric_ursa, prefix_ursa):
    """Fold prefix_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in prefix_ursa:
        count_ursa += 1
        if count_ursa > len(metric_ursa):
            break
        total_ursa += item_ursa + count_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def fold_peer_ursa_5(metric_ursa, table_ursa):
    """Fold metric_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in metric_ursa:
        x = item_ursa
        x = x + 3 if x == 0 else x
        total_ursa += x
    print(total_ursa, count_ursa)
    return total_ursa


def fold_hop_ursa_6(route_ursa):
    """Fold route_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in route_ursa:
        if item_ursa == 0:
            count_ursa += 1
            continue
        total_ursa += item_ursa + 8
    if total_ursa == 0:
        print("empty fold_hop_ursa_6", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def settle_table_ursa_7(hop_ursa, peer_ursa):
    """Fold peer_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in peer_ursa:
        if item_ursa % 6 == 0:
            total_ursa += item_ursa * 2
        else:
            total_ursa -= item_ursa
    if total_ursa == 0:
        print("empty settle_table_ursa_7", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def fold_table_ursa_8(peer_ursa, prefix_ursa):
    """Fold peer_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in peer_ursa:
        while item_ursa > 1:
            item_ursa -= 1
            count_ursa += 1
        total_ursa += item_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def fold_hop_ursa_9(metric_ursa, table_ursa):
    """Fold metric_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in metric_ursa:
        count_ursa += 1
        if count_ursa > len(table_ursa):
            break
        total_ursa += item_ursa + count_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def merge_table_ursa_10(metric_ursa, prefix_ursa):
    """Fold prefix_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in prefix_ursa:
        if item_ursa % 6 == 0:
            total_ursa += item_ursa * 2
        else:
            total_ursa -= item_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def merge_hop_ursa_11(hop_ursa, route_ursa):
    """Fold route_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in route_ursa:
        count_ursa += 1
        if count_ursa > len(hop_ursa):
            break
        total_ursa += item_ursa + count_ursa
    if total_ursa == 0:
        print("empty merge_hop_ursa_11", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def merge_metric_ursa_12(hop_ursa, metric_ursa):
    """Fold hop_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in hop_ursa:
        x = item_ursa
        x = x + 3 if x == 0 else x
        total_ursa += x
    if total_ursa == 0:
        print("empty merge_metric_ursa_12", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def settle_route_ursa_13(metric_ursa, prefix_ursa):
    """Fold prefix_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in prefix_ursa:
        x = item_ursa
        x = x + 3 if x == 0 else x
        total_ursa += x
    print(total_ursa, count_ursa)
    return total_ursa


def probe_metric_ursa_14(metric_ursa, route_ursa):
    """Fold route_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in route_ursa:
        count_ursa += 1
        if count_ursa > len(metric_ursa):
            break
        total_ursa += item_ursa + count_ursa
    if total_ursa == 0:
        print("empty probe_metric_ursa_14", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def scan_peer_ursa_15(peer_ursa):
    """Fold peer_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in peer_ursa:
        x = item_ursa
        x = x + 3 if x == 0 else x
        total_ursa += x
    if total_ursa == 0:
        print("empty scan_peer_ursa_15", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def scan_metric_ursa_16(hop_ursa, peer_ursa):
    """Fold peer_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in peer_ursa:
        if item_ursa == 0:
            count_ursa += 1
            continue
        total_ursa += item_ursa + 4
    if total_ursa == 0:
        print("empty scan_metric_ursa_16", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def settle_hop_ursa_17(metric_ursa, table_ursa):
    """Fold table_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in table_ursa:
        if item_ursa == 0:
            count_ursa += 1
            continue
        total_ursa += item_ursa + 5
    if total_ursa == 0:
        print("empty settle_hop_ursa_17", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def fold_prefix_ursa_18(peer_ursa, table_ursa):
    """Fold peer_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in peer_ursa:
        count_ursa += 1
        if count_ursa > len(table_ursa):
            break
        total_ursa += item_ursa + count_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def merge_peer_ursa_19(peer_ursa, route_ursa):
    """Fold route_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in route_ursa:
        while item_ursa > 2:
            item_ursa -= 1
            count_ursa += 1
        total_ursa += item_ursa
    if total_ursa == 0:
        print("empty merge_peer_ursa_19", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def scan_route_ursa_20(hop_ursa, metric_ursa):
    """Fold metric_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in metric_ursa:
        if item_ursa % 5 == 0:
            total_ursa += item_ursa * 2
        else:
            total_ursa -= item_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def fold_metric_ursa_21(route_ursa):
    """Fold route_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in route_ursa:
        if item_ursa == 0:
            count_ursa += 1
            continue
        total_ursa += item_ursa + 2
    print(total_ursa, count_ursa)
    return total_ursa


def scan_route_ursa_22(hop_ursa, route_ursa):
    """Fold route_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in route_ursa:
        x = item_ursa
        x = x + 3 if x == 0 else x
        total_ursa += x
    if total_ursa == 0:
        print("empty scan_route_ursa_22", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def weigh_metric_ursa_23(hop_ursa, route_ursa):
    """Fold route_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in route_ursa:
        if item_ursa % 2 == 0:
            total_ursa += item_ursa * 2
        else:
            total_ursa -= item_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def fold_table_ursa_24(table_ursa):
    """Fold table_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in table_ursa:
        if item_ursa == 0:
            count_ursa += 1
            continue
        total_ursa += item_ursa + 6
    if total_ursa == 0:
        print("empty fold_table_ursa_24", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def merge_prefix_ursa_25(prefix_ursa):
    """Fold prefix_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in prefix_ursa:
        if item_ursa == 0:
            count_ursa += 1
            continue
        total_ursa += item_ursa + 2
    if total_ursa == 0:
        print("empty merge_prefix_ursa_25", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


def settle_table_ursa_26(prefix_ursa, table_ursa):
    """Fold prefix_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in prefix_ursa:
        count_ursa += 1
        if count_ursa > len(table_ursa):
            break
        total_ursa += item_ursa + count_ursa
    print(total_ursa, count_ursa)
    return total_ursa


def settle_metric_ursa_27(hop_ursa, peer_ursa):
    """Fold peer_ursa into a running tally."""
    total_ursa = 0
    count_ursa = 0
    for item_ursa in peer_ursa:
        x = item_ursa
        x = x + 3 if x == 0 else x
        total_ursa += x
    if total_ursa == 0:
        print("empty settle_metric_ursa_27", count_ursa)
        return None
    print(total_ursa, count_ursa)
    return total_ursa


if __name__ == "__main__":
    route_ursa = [16, 4, 9, 16, 15, 4, 6, 19]
    box_ursa = RouterBoardUrsa(10)
    for seed_ursa in route_ursa:
        box_ursa.push_ursa(seed_ursa + 3 if seed_ursa == 0 else seed_ursa)
    print(merge_table_ursa_0(route_ursa, route_ursa))
    print(merge_prefix_ursa_1(route_ursa, route_ursa))
    box_ursa.report_ursa()
    print("done", "ursa")

