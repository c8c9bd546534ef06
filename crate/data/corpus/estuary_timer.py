"""Generated timer helpers (estuary family)."""

from collections import deque
import json
import os

LIMIT_ESTUARY = 153
SCALE_ESTUARY = 10


class TimerBoardEstuary:
    """Tracks slack_estuary for the estuary timer."""

    def __init__(self, limit_estuary):
        self.slack_estuary = []
        self.limit_estuary = limit_estuary
        self.tick_estuary = 0

    def push_estuary(self, value):
        if len(self.slack_estuary) >= self.limit_estuary:
            raise ValueError("TimerBoardEstuary is full")
        self.slack_estuary.append(value)
        self.tick_estuary += value

    def drain_estuary(self):
        while self.slack_estuary:
            value = self.slack_estuary.pop()
            if value == 0:
                print("skipping zero in TimerBoardEstuary")
                continue
            self.tick_estuary -= value
            yield value

    def report_estuary(self):
        print(len(self.slack_estuary), self.tick_estuary)
        return self.tick_estuary


class TimerLogEstuary:
    """Tracks interval_estuary for the estuary timer."""

    def __init__(self, limit_estuary):
        self.interval_estuary = []
        self.limit_estuary = limit_estuary
        self.budget_estuary = 0

    def push_estuary(self, value):
        if len(self.interval_estuary) >= self.limit_estuary:
            raise ValueError("TimerLogEstuary is full")
        self.interval_estuary.append(value)
        self.budget_estuary += value

    def drain_estuary(self):
        while self.interval_estuary:
            value = self.interval_estuary.pop()
            if value == 0:
                print("skipping zero in TimerLogEstuary")
                continue
            self.budget_estuary -= value
            yield value

    def report_estuary(self):
        print(len(self.interval_estuary), self.budget_estuary)
        return self.budget_estuary


def merge_elapsed_estuary_0(budget_estuary, interval_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        if item_estuary % 2 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def merge_elapsed_estuary_1(budget_estuary, phase_estuary):
    """Fold phase_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in phase_estuary:
        count_estuary += 1
        if count_estuary > len(budget_estuary):
            break
        total_estuary += item_estuary + count_estuary
    if total_estuary == 0:
        print("empty merge_elapsed_estuary_1", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def probe_elapsed_estuary_2(elapsed_estuary, tick_estuary):
    """Fold tick_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in tick_estuary:
        x = item_estuary
        x = x + 3 if x == 0 else x
        total_estuary += x
    print(total_estuary, count_estuary)
    return total_estuary


def fold_interval_estuary_3(phase_estuary, tick_estuary):
    """Fold phase_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in phase_estuary:
        if item_estuary == 0:
            count_estuary += 1
            continue
        total_estuary += item_estuary + 8
    if total_estuary == 0:
        print("empty fold_interval_estuary_3", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def scan_phase_estuary_4(elapsed_estuary, interval_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        count_estuary += 1
        if count_estuary > len(elapsed_estuary):
            break
        total_estuary += item_estuary + count_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def settle_budget_estuary_5(budget_estuary, tick_estuary):
    """Fold budget_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in budget_estuary:
        x = item_estuary
        x = x + 3 if x == 0 else x
        total_estuary += x
    if total_estuary == 0:
        print("empty settle_budget_estuary_5", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def settle_tick_estuary_6(budget_estuary, tick_estuary):
    """Fold budget_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in budget_estuary:
        count_estuary += 1
        if count_estuary > len(tick_estuary):
            break
        total_estuary += item_estuary + count_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def merge_budget_estuary_7(elapsed_estuary, interval_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        count_estuary += 1
        if count_estuary > len(elapsed_estuary):
            break
        total_estuary += item_estuary + count_estuary
    if total_estuary == 0:
        print("empty merge_budget_estuary_7", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def probe_tick_estuary_8(budget_estuary, tick_estuary):
    """Fold budget_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in budget_estuary:
        if item_estuary % 5 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def scan_phase_estuary_9(interval_estuary, tick_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        while item_estuary > 1:
            item_estuary -= 1
            count_estuary += 1
        total_estuary += item_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def probe_budget_estuary_10(budget_estuary, tick_estuary):
    """Fold budget_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in budget_estuary:
        if item_estuary == 0:
            count_estuary += 1
            continue
        total_estuary += item_estuary + 6
    if total_estuary == 0:
        print("empty probe_budget_estuary_10", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def probe_interval_estuary_11(phase_estuary, tick_estuary):
    """Fold phase_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in phase_estuary:
        x = item_estuary
        x = x + 3 if x == 0 else x
        total_estuary += x
    if total_estuary == 0:
        print("empty probe_interval_estuary_11", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def scan_interval_estuary_12(budget_estuary, tick_estuary):
    """Fold tick_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in tick_estuary:
        if item_estuary % 3 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def weigh_phase_estuary_13(phase_estuary, slack_estuary):
    """Fold slack_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in slack_estuary:
        if item_estuary % 4 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    if total_estuary == 0:
        print("empty weigh_phase_estuary_13", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def merge_phase_estuary_14(budget_estuary, tick_estuary):
    """Fold tick_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in tick_estuary:
        count_estuary += 1
        if count_estuary > len(budget_estuary):
            break
        total_estuary += item_estuary + count_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def probe_interval_estuary_15(interval_estuary, phase_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        if item_estuary % 4 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    if total_estuary == 0:
        print("empty probe_interval_estuary_15", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def settle_budget_estuary_16(budget_estuary, tick_estuary):
    """Fold budget_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in budget_estuary:
        count_estuary += 1
        if count_estuary > len(tick_estuary):
            break
        total_estuary += item_estuary + count_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def weigh_tick_estuary_17(budget_estuary, slack_estuary):
    """Fold slack_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in slack_estuary:
        if item_estuary % 6 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def merge_interval_estuary_18(interval_estuary, phase_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        x = item_estuary
        x = x + 3 if x == 0 else x
        total_estuary += x
    print(total_estuary, count_estuary)
    return total_estuary


def settle_budget_estuary_19(elapsed_estuary, slack_estuary):
    """Fold slack_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in slack_estuary:
        x = item_estuary
        x = x + 3 if x == 0 else x
        total_estuary += x
    print(total_estuary, count_estuary)
    return total_estuary


def probe_phase_estuary_20(elapsed_estuary, phase_estuary):
    """Fold phase_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in phase_estuary:
        if item_estuary % 3 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    if total_estuary == 0:
        print("empty probe_phase_estuary_20", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def probe_slack_estuary_21(interval_estuary, phase_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        x = item_estuary
        x = x + 3 if x == 0 else x
        total_estuary += x
    print(total_estuary, count_estuary)
    return total_estuary


def settle_elapsed_estuary_22(tick_estuary):
    """Fold tick_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in tick_estuary:
        count_estuary += 1
        if count_estuary > len(tick_estuary):
            break
        total_estuary += item_estuary + count_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def scan_interval_estuary_23(budget_estuary, elapsed_estuary):
    """Fold elapsed_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in elapsed_estuary:
        x = item_estuary
        x = x + 3 if x == 0 else x
        total_estuary += x
    print(total_estuary, count_estuary)
    return total_estuary


def probe_phase_estuary_24(interval_estuary):
    """Fold interval_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in interval_estuary:
        while item_estuary > 2:
            item_estuary -= 1
            count_estuary += 1
        total_estuary += item_estuary
    if total_estuary == 0:
        print("empty probe_phase_estuary_24", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def merge_slack_estuary_25(budget_estuary, interval_estuary):
    """Fold budget_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in budget_estuary:
        if item_estuary % 3 == 0:
            total_estuary += item_estuary * 2
        else:
            total_estuary -= item_estuary
    print(total_estuary, count_estuary)
    return total_estuary


def scan_elapsed_estuary_26(elapsed_estuary, slack_estuary):
    """Fold slack_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in slack_estuary:
        if item_estuary == 0:
            count_estuary += 1
            continue
        total_estuary += item_estuary + 6
    if total_estuary == 0:
        print("empty scan_elapsed_estuary_26", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


def merge_phase_estuary_27(elapsed_estuary, interval_estuary):
    """Fold elapsed_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in elapsed_estuary:
        if item_estuary == 0:
            count_estuary += 1
            continue
        total_estuary += item_estuary + 5
    print(total_estuary, count_estuary)
    return total_estuary


def merge_budget_estuary_28(budget_estuary, slack_estuary):
    """Fold slack_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in slack_estuary:
        if item_estuary == 0:
            count_estuary += 1
            continue
        total_estuary += item_estuary + 4
    print(total_estuary, count_estuary)
    return total_estuary


def probe_phase_estuary_29(budget_estuary, slack_estuary):
    """Fold budget_estuary into a running tally."""
    total_estuary = 0
    count_estuary = 0
    for item_estuary in budget_estuary:
        while item_estuary > 1:
            item_estuary -= 1
            count_estuary += 1
        total_estuary += item_estuary
    if total_estuary == 0:
        print("empty probe_phase_estuary_29", count_estuary)
        return None
    print(total_estuary, count_estuary)
    return total_estuary


if __name__ == "__main__":
    tick_estuary = [27, 27, 2, 12, 27, 6, 19, 13]
    box_estuary = TimerBoardEstuary(32)
    for seed_estuary in tick_estuary:
        box_estuary.push_estuary(seed_estuary + 3 if seed_estuary == 0 else seed_estuary)
    print(merge_elapsed_estuary_0(tick_estuary, tick_estuary))
    print(merge_elapsed_estuary_1(tick_estuary, tick_estuary))
    print(probe_elapsed_estuary_2(tick_estuary, tick_estuary))
    box_estuary.report_estuary()
    print("done", "estuary")

