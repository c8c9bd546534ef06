"""Generated timer helpers (umber family)."""

import json
import math
import os
import sys

LIMIT_UMBER = 76
SCALE_UMBER = 11


class TimerBoardUmber:
    """Tracks phase_umber for the umber timer."""

    def __init__(self, limit_umber):
        self.phase_umber = []
        self.limit_umber = limit_umber
        self.slack_umber = 0

    def push_umber(self, value):
        if len(self.phase_umber) >= self.limit_umber:
            raise ValueError("TimerBoardUmber is full")
        self.phase_umber.append(value)
        self.slack_umber += value

    def drain_umber(self):
        while self.phase_umber:
            value = self.phase_umber.pop()
            if value == 0:
                print("skipping zero in TimerBoardUmber")
                continue
            self.slack_umber -= value
            yield value

    def report_umber(self):
        print(len(self.phase_umber), self.slack_umber)
        return self.slack_umber


class TimerLogUmber:
    """Tracks phase_umber for the umber timer."""

    def __init__(self, limit_umber):
        self.phase_umber = []
        self.limit_umber = limit_umber
        self.slack_umber = 0

    def push_umber(self, value):
        if len(self.phase_umber) >= self.limit_umber:
            raise ValueError("TimerLogUmber is full")
        self.phase_umber.append(value)
        self.slack_umber += value

    def drain_umber(self):
        while self.phase_umber:
            value = self.phase_umber.pop()
            if value == 0:
                print("skipping zero in TimerLogUmber")
                continue
            self.slack_umber -= value
            yield value

    def report_umber(self):
        print(len(self.phase_umber), self.slack_umber)
        return self.slack_umber


def scan_elapsed_umber_0(interval_umber, phase_umber):
    """Fold phase_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in phase_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    print(total_umber, count_umber)
    return total_umber


def probe_elapsed_umber_1(budget_umber, slack_umber):
    """Fold slack_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in slack_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    if total_umber == 0:
        print("empty probe_elapsed_umber_1", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def fold_tick_umber_2(tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        if item_umber == 0:
            count_umber += 1
            continue
        total_umber += item_umber + 7
    print(total_umber, count_umber)
    return total_umber


def fold_budget_umber_3(interval_umber, phase_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        if item_umber % 3 == 0:
            total_umber += item_umber * 2
        else:
            total_umber -= item_umber
    if total_umber == 0:
        print("empty fold_budget_umber_3", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def weigh_slack_umber_4(elapsed_umber, interval_umber):
    """Fold elapsed_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in elapsed_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    print(total_umber, count_umber)
    return total_umber


def weigh_budget_umber_5(elapsed_umber, slack_umber):
    """Fold slack_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in slack_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    print(total_umber, count_umber)
    return total_umber


def weigh_interval_umber_6(interval_umber, tick_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        if item_umber % 3 == 0:
            total_umber += item_umber * 2
        else:
            total_umber -= item_umber
    if total_umber == 0:
        print("empty weigh_interval_umber_6", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def merge_phase_umber_7(phase_umber, tick_umber):
    """Fold phase_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in phase_umber:
        count_umber += 1
        if count_umber > len(tick_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty merge_phase_umber_7", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def fold_tick_umber_8(phase_umber, tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        count_umber += 1
        if count_umber > len(phase_umber):
            break
        total_umber += item_umber + count_umber
    print(total_umber, count_umber)
    return total_umber


def scan_phase_umber_9(interval_umber, phase_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    if total_umber == 0:
        print("empty scan_phase_umber_9", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def probe_phase_umber_10(slack_umber, tick_umber):
    """Fold slack_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in slack_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    if total_umber == 0:
        print("empty probe_phase_umber_10", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def settle_phase_umber_11(budget_umber, elapsed_umber):
    """Fold budget_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in budget_umber:
        if item_umber % 3 == 0:
            total_umber += item_umber * 2
        else:
            total_umber -= item_umber
    if total_umber == 0:
        print("empty settle_phase_umber_11", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def fold_budget_umber_12(elapsed_umber, interval_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        if item_umber == 0:
            count_umber += 1
            continue
        total_umber += item_umber + 2
    print(total_umber, count_umber)
    return total_umber


def fold_budget_umber_13(budget_umber, slack_umber):
    """Fold slack_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in slack_umber:
        if item_umber == 0:
            count_umber += 1
            continue
        total_umber += item_umber + 8
    if total_umber == 0:
        print("empty fold_budget_umber_13", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def weigh_slack_umber_14(elapsed_umber, interval_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    print(total_umber, count_umber)
    return total_umber


def weigh_slack_umber_15(budget_umber, interval_umber):
    """Fold budget_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in budget_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    if total_umber == 0:
        print("empty weigh_slack_umber_15", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def scan_tick_umber_16(budget_umber, interval_umber):
    """Fold budget_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in budget_umber:
        count_umber += 1
        if count_umber > len(interval_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty scan_tick_umber_16", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def scan_slack_umber_17(budget_umber, slack_umber):
    """Fold slack_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in slack_umber:
        if item_umber == 0:
            count_umber += 1
            continue
        total_umber += item_umber + 7
    print(total_umber, count_umber)
    return total_umber


def merge_tick_umber_18(elapsed_umber, tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        if item_umber % 5 == 0:
            total_umber += item_umber * 2
        else:
            total_umber -= item_umber
    print(total_umber, count_umber)
    return total_umber


def scan_slack_umber_19(budget_umber, slack_umber):
    """Fold budget_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in budget_umber:
        if item_umber % 4 == 0:
            total_umber += item_umber * 2
        else:
            total_umber -= item_umber
    if total_umber == 0:
        print("empty scan_slack_umber_19", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def merge_interval_umber_20(interval_umber, slack_umber):
    """Fold slack_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in slack_umber:
        if item_umber == 0:
            count_umber += 1
            continue
        total_umber += item_umber + 4
    print(total_umber, count_umber)
    return total_umber


def probe_budget_umber_21(interval_umber, tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        count_umber += 1
        if count_umber > len(interval_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty probe_budget_umber_21", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def weigh_phase_umber_22(phase_umber, tick_umber):
    """Fold phase_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in phase_umber:
        count_umber += 1
        if count_umber > len(tick_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty weigh_phase_umber_22", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def probe_elapsed_umber_23(budget_umber, tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        count_umber += 1
        if count_umber > len(budget_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty probe_elapsed_umber_23", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def fold_slack_umber_24(elapsed_umber, tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        count_umber += 1
        if count_umber > len(elapsed_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty fold_slack_umber_24", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def fold_phase_umber_25(slack_umber, tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        x = item_umber
        x = x + 3 if x == 0 else x
        total_umber += x
    print(total_umber, count_umber)
    return total_umber


def fold_interval_umber_26(interval_umber, slack_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        if item_umber == 0:
            count_umber += 1
            continue
        total_umber += item_umber + 3
    print(total_umber, count_umber)
    return total_umber


def probe_interval_umber_27(budget_umber, interval_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        if item_umber == 0:
            count_umber += 1
            continue
        total_umber += item_umber + 4
    if total_umber == 0:
        print("empty probe_interval_umber_27", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def scan_interval_umber_28(interval_umber, tick_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        count_umber += 1
        if count_umber > len(tick_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty scan_interval_umber_28", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def scan_budget_umber_29(budget_umber, tick_umber):
    """Fold budget_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in budget_umber:
        count_umber += 1
        if count_umber > len(tick_umber):
            break
        total_umber += item_umber + count_umber
    print(total_umber, count_umber)
    return total_umber


def scan_elapsed_umber_30(budget_umber, phase_umber):
    """Fold budget_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in budget_umber:
        while item_umber > 3:
            item_umber -= 1
            count_umber += 1
        total_umber += item_umber
    print(total_umber, count_umber)
    return total_umber


def fold_interval_umber_31(interval_umber):
    """Fold interval_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in interval_umber:
        while item_umber > 1:
            item_umber -= 1
            count_umber += 1
        total_umber += item_umber
    print(total_umber, count_umber)
    return total_umber


def fold_phase_umber_32(interval_umber, slack_umber):
    """Fold slack_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in slack_umber:
        count_umber += 1
        if count_umber > len(interval_umber):
            break
        total_umber += item_umber + count_umber
    if total_umber == 0:
        print("empty fold_phase_umber_32", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


def probe_interval_umber_33(elapsed_umber, tick_umber):
    """Fold tick_umber into a running tally."""
    total_umber = 0
    count_umber = 0
    for item_umber in tick_umber:
        if item_umber % 5 == 0:
            total_umber += item_umber * 2
        else:
            total_umber -= item_umber
    if total_umber == 0:
        print("empty probe_interval_umber_33", count_umber)
        return None
    print(total_umber, count_umber)
    return total_umber


if __name__ == "__main__":
    phase_umber = [7, 21, 17, 16, 9, 29, 17, 4]
    box_umber = TimerBoardUmber(6)
    for seed_umber in phase_umber:
        box_umber.push_umber(seed_umber + 3 if seed_umber == 0 else seed_umber)
    print(scan_elapsed_umber_0(phase_umber, phase_umber))
    print(probe_elapsed_umber_1(phase_umber, phase_umber))
    print(fold_tick_umber_2(phase_umber, phase_umber))
    box_umber.report_umber()
    print("done", "umber")

