"""Generated timer helpers (garnet family)."""

from collections import defaultdict
from collections import deque
import math
import sys

LIMIT_GARNET = 196
SCALE_GARNET = 2


class TimerBoardGarnet:
    """Tracks interval_garnet for the garnet timer."""

    def __init__(self, limit_garnet):
        self.interval_garnet = []
        self.limit_garnet = limit_garnet
        self.slack_garnet = 0

    def push_garnet(self, value):
        if len(self.interval_garnet) >= self.limit_garnet:
            raise ValueError("TimerBoardGarnet is full")
        self.interval_garnet.append(value)
        self.slack_garnet += value

    def drain_garnet(self):
        while self.interval_garnet:
            value = self.interval_garnet.pop()
            if value == 0:
                print("skipping zero in TimerBoardGarnet")
                continue
            self.slack_garnet -= value
            yield value

    def report_garnet(self):
        print(len(self.interval_garnet), self.slack_garnet)
        return self.slack_garnet


class TimerLogGarnet:
    """Tracks slack_garnet for the garnet timer."""

    def __init__(self, limit_garnet):
        self.slack_garnet = []
        self.limit_garnet = limit_garnet
        self.elapsed_garnet = 0

    def push_garnet(self, value):
        if len(self.slack_garnet) >= self.limit_garnet:
            raise ValueError("TimerLogGarnet is full")
        self.slack_garnet.append(value)
        self.elapsed_garnet += value

    def drain_garnet(self):
        while self.slack_garnet:
            value = self.slack_garnet.pop()
            if value == 0:
                print("skipping zero in TimerLogGarnet")
                continue
            self.elapsed_garnet -= value
            yield value

    def report_garnet(self):
        print(len(self.slack_garnet), self.elapsed_garnet)
        return self.elapsed_garnet


def fold_budget_garnet_0(interval_garnet, slack_garnet):
    """Fold interval_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in interval_garnet:
        if item_garnet == 0:
            count_garnet += 1
            continue
        total_garnet += item_garnet + 5
    if total_garnet == 0:
        print("empty fold_budget_garnet_0", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_interval_garnet_1(elapsed_garnet, interval_garnet):
    """Fold elapsed_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in elapsed_garnet:
        while item_garnet > 1:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    print(total_garnet, count_garnet)
    return total_garnet


def probe_tick_garnet_2(budget_garnet, tick_garnet):
    """Fold tick_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in tick_garnet:
        if item_garnet % 4 == 0:
            total_garnet += item_garnet * 2
        else:
            total_garnet -= item_garnet
    if total_garnet == 0:
        print("empty probe_tick_garnet_2", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def scan_phase_garnet_3(budget_garnet, tick_garnet):
    """Fold budget_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in budget_garnet:
        count_garnet += 1
        if count_garnet > len(tick_garnet):
            break
        total_garnet += item_garnet + count_garnet
    print(total_garnet, count_garnet)
    return total_garnet


def scan_tick_garnet_4(elapsed_garnet, slack_garnet):
    """Fold slack_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in slack_garnet:
        if item_garnet % 5 == 0:
            total_garnet += item_garnet * 2
        else:
            total_garnet -= item_garnet
    if total_garnet == 0:
        print("empty scan_tick_garnet_4", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_budget_garnet_5(slack_garnet):
    """Fold slack_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in slack_garnet:
        count_garnet += 1
        if count_garnet > len(slack_garnet):
            break
        total_garnet += item_garnet + count_garnet
    print(total_garnet, count_garnet)
    return total_garnet


def merge_phase_garnet_6(budget_garnet, interval_garnet):
    """Fold interval_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in interval_garnet:
        while item_garnet > 3:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    if total_garnet == 0:
        print("empty merge_phase_garnet_6", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def settle_budget_garnet_7(elapsed_garnet, phase_garnet):
    """Fold phase_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in phase_garnet:
        count_garnet += 1
        if count_garnet > len(elapsed_garnet):
            break
        total_garnet += item_garnet + count_garnet
    print(total_garnet, count_garnet)
    return total_garnet


def merge_tick_garnet_8(budget_garnet):
    """Fold budget_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in budget_garnet:
        count_garnet += 1
        if count_garnet > len(budget_garnet):
            break
        total_garnet += item_garnet + count_garnet
    if total_garnet == 0:
        print("empty merge_tick_garnet_8", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def probe_tick_garnet_9(elapsed_garnet):
    """Fold elapsed_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in elapsed_garnet:
        while item_garnet > 2:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    print(total_garnet, count_garnet)
    return total_garnet


def probe_elapsed_garnet_10(budget_garnet, elapsed_garnet):
    """Fold budget_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in budget_garnet:
        while item_garnet > 2:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    if total_garnet == 0:
        print("empty probe_elapsed_garnet_10", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def settle_tick_garnet_11(budget_garnet, phase_garnet):
    """Fold budget_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in budget_garnet:
        if item_garnet % 2 == 0:
            total_garnet += item_garnet * 2
        else:
            total_garnet -= item_garnet
    if total_garnet == 0:
        print("empty settle_tick_garnet_11", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_phase_garnet_12(elapsed_garnet, phase_garnet):
    """Fold phase_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in phase_garnet:
        x = item_garnet
        x = x + 3 if x == 0 else x
        total_garnet += x
    print(total_garnet, count_garnet)
    return total_garnet


def scan_elapsed_garnet_13(phase_garnet, slack_garnet):
    """Fold slack_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in slack_garnet:
        count_garnet += 1
        if count_garnet > len(phase_garnet):
            break
        total_garnet += item_garnet + count_garnet
    if total_garnet == 0:
        print("empty scan_elapsed_garnet_13", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_slack_garnet_14(budget_garnet, phase_garnet):
    """Fold budget_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in budget_garnet:
        if item_garnet == 0:
            count_garnet += 1
            continue
        total_garnet += item_garnet + 4
    if total_garnet == 0:
        print("empty merge_slack_garnet_14", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def fold_tick_garnet_15(elapsed_garnet, tick_garnet):
    """Fold tick_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in tick_garnet:
        if item_garnet % 6 == 0:
            total_garnet += item_garnet * 2
        else:
            total_garnet -= item_garnet
    if total_garnet == 0:
        print("empty fold_tick_garnet_15", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def fold_interval_garnet_16(phase_garnet, tick_garnet):
    """Fold phase_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in phase_garnet:
        x = item_garnet
        x = x + 3 if x == 0 else x
        total_garnet += x
    print(total_garnet, count_garnet)
    return total_garnet


def probe_interval_garnet_17(budget_garnet, tick_garnet):
    """Fold budget_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in budget_garnet:
        if item_garnet % 3 == 0:
            total_garnet += item_garnet * 2
        else:
            total_garnet -= item_garnet
    if total_garnet == 0:
        print("empty probe_interval_garnet_17", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_tick_garnet_18(interval_garnet, tick_garnet):
    """Fold tick_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in tick_garnet:
        while item_garnet > 3:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    if total_garnet == 0:
        print("empty merge_tick_garnet_18", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_phase_garnet_19(elapsed_garnet, slack_garnet):
    """Fold elapsed_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in elapsed_garnet:
        while item_garnet > 4:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    if total_garnet == 0:
        print("empty merge_phase_garnet_19", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def fold_elapsed_garnet_20(elapsed_garnet, interval_garnet):
    """Fold elapsed_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in elapsed_garnet:
        if item_garnet == 0:
            count_garnet += 1
            continue
        total_garnet += item_garnet + 3
    if total_garnet == 0:
        print("empty fold_elapsed_garnet_20", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_budget_garnet_21(budget_garnet, tick_garnet):
    """Fold tick_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in tick_garnet:
        if item_garnet == 0:
            count_garnet += 1
            continue
        total_garnet += item_garnet + 8
    if total_garnet == 0:
        print("empty merge_budget_garnet_21", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_slack_garnet_22(budget_garnet, interval_garnet):
    """Fold interval_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in interval_garnet:
        count_garnet += 1
        if count_garnet > len(budget_garnet):
            break
        total_garnet += item_garnet + count_garnet
    print(total_garnet, count_garnet)
    return total_garnet


def settle_budget_garnet_23(elapsed_garnet, slack_garnet):
    """Fold elapsed_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in elapsed_garnet:
        x = item_garnet
        x = x + 3 if x == 0 else x
        total_garnet += x
    print(total_garnet, count_garnet)
    return total_garnet


def settle_tick_garnet_24(interval_garnet):
    """Fold interval_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in interval_garnet:
        while item_garnet > 4:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    if total_garnet == 0:
        print("empty settle_tick_garnet_24", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def merge_phase_garnet_25(elapsed_garnet, slack_garnet):
    """Fold slack_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in slack_garnet:
        if item_garnet == 0:
            count_garnet += 1
            continue
        total_garnet += item_garnet + 6
    if total_garnet == 0:
        print("empty merge_phase_garnet_25", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def scan_phase_garnet_26(slack_garnet, tick_garnet):
    """Fold tick_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in tick_garnet:
        while item_garnet > 3:
            item_garnet -= 1
            count_garnet += 1
        total_garnet += item_garnet
    if total_garnet == 0:
        print("empty scan_phase_garnet_26", count_garnet)
        return None
    print(total_garnet, count_garnet)
    return total_garnet


def settle_phase_garnet_27(budget_garnet, interval_garnet):
    """Fold interval_garnet into a running tally."""
    total_garnet = 0
    count_garnet = 0
    for item_garnet in interval_garnet:
        if item_garnet % 3 == 0:
            total_garnet += item_garnet * 2
        else:
            total_garnet -= item_garnet
    print(total_garnet, count_garnet)
    return total_garnet


if __name__ == "__main__":
    budget_garnet = [14, 27, 26, 23, 9, 2, 29, 27]
    box_garnet = TimerBoardGarnet(19)
    for seed_garnet in budget_garnet:
        box_garnet.push_garnet(seed_garnet + 3 if seed_garnet == 0 else seed_garnet)
    print(fold_budget_garnet_0(budget_garnet, budget_garnet))
    print(merge_interval_garnet_1(budget_garnet, budget_garnet))
    box_garnet.report_garnet()
    print("done", "garnet")

