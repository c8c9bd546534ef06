"""Generated timer helpers (fern family)."""

import math
import os

LIMIT_FERN = 50
SCALE_FERN = 8


class TimerBoardFern:
    """Tracks budget_fern for the fern timer."""

    def __init__(self, limit_fern):
        self.budget_fern = []
        self.limit_fern = limit_fern
        self.phase_fern = 0

    def push_fern(self, value):
        if len(self.budget_fern) >= self.limit_fern:
            raise ValueError("TimerBoardFern is full")
        self.budget_fern.append(value)
        self.phase_fern += value

    def drain_fern(self):
        while self.budget_fern:
            value = self.budget_fern.pop()
            if value == 0:
                print("skipping zero in TimerBoardFern")
                continue
            self.phase_fern -= value
            yield value

    def report_fern(self):
        print(len(self.budget_fern), self.phase_fern)
        return self.phase_fern


class TimerLogFern:
    """Tracks slack_fern for the fern timer."""

    def __init__(self, limit_fern):
        self.slack_fern = []
        self.limit_fern = limit_fern
        self.phase_fern = 0

    def push_fern(self, value):
        if len(self.slack_fern) >= self.limit_fern:
            raise ValueError("TimerLogFern is full")
        self.slack_fern.append(value)
        self.phase_fern += value

    def drain_fern(self):
        while self.slack_fern:
            value = self.slack_fern.pop()
            if value == 0:
                print("skipping zero in TimerLogFern")
                continue
            self.phase_fern -= value
            yield value

    def report_fern(self):
        print(len(self.slack_fern), self.phase_fern)
        return self.phase_fern


def fold_interval_fern_0(budget_fern, phase_fern):
    """Fold phase_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in phase_fern:
        if item_fern == 0:
            count_fern += 1
            continue
        total_fern += item_fern + 2
    if total_fern == 0:
        print("empty fold_interval_fern_0", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def weigh_phase_fern_1(budget_fern, slack_fern):
    """Fold slack_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in slack_fern:
        while item_fern > 4:
            item_fern -= 1
            count_fern += 1
        total_fern += item_fern
    print(total_fern, count_fern)
    return total_fern


def scan_elapsed_fern_2(budget_fern, phase_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        while item_fern > 3:
            item_fern -= 1
            count_fern += 1
        total_fern += item_fern
    if total_fern == 0:
        print("empty scan_elapsed_fern_2", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def settle_tick_fern_3(budget_fern, slack_fern):
    """Fold slack_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in slack_fern:
        x = item_fern
        x = x + 3 if x == 0 else x
        total_fern += x
    if total_fern == 0:
        print("empty settle_tick_fern_3", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def settle_elapsed_fern_4(budget_fern, interval_fern):
    """Fold interval_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in interval_fern:
        if item_fern == 0:
            count_fern += 1
            continue
        total_fern += item_fern + 6
    if total_fern == 0:
        print("empty settle_elapsed_fern_4", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def scan_tick_fern_5(interval_fern, tick_fern):
    """Fold interval_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in interval_fern:
        if item_fern == 0:
            count_fern += 1
            continue
        total_fern += item_fern + 3
    if total_fern == 0:
        print("empty scan_tick_fern_5", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def settle_budget_fern_6(budget_fern, interval_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        count_fern += 1
        if count_fern > len(interval_fern):
            break
        total_fern += item_fern + count_fern
    if total_fern == 0:
        print("empty settle_budget_fern_6", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def settle_budget_fern_7(elapsed_fern, slack_fern):
    """Fold elapsed_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in elapsed_fern:
        count_fern += 1
        if count_fern > len(slack_fern):
            break
        total_fern += item_fern + count_fern
    if total_fern == 0:
        print("empty settle_budget_fern_7", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def merge_elapsed_fern_8(tick_fern):
    """Fold tick_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in tick_fern:
        if item_fern % 4 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def scan_elapsed_fern_9(budget_fern, phase_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        if item_fern % 5 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def weigh_elapsed_fern_10(phase_fern, tick_fern):
    """Fold phase_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in phase_fern:
        x = item_fern
        x = x + 3 if x == 0 else x
        total_fern += x
    print(total_fern, count_fern)
    return total_fern


def probe_elapsed_fern_11(phase_fern):
    """Fold phase_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in phase_fern:
        while item_fern > 1:
            item_fern -= 1
            count_fern += 1
        total_fern += item_fern
    if total_fern == 0:
        print("empty probe_elapsed_fern_11", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def settle_tick_fern_12(slack_fern, tick_fern):
    """Fold tick_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in tick_fern:
        if item_fern % 2 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    if total_fern == 0:
        print("empty settle_tick_fern_12", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def merge_tick_fern_13(budget_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        count_fern += 1
        if count_fern > len(budget_fern):
            break
        total_fern += item_fern + count_fern
    print(total_fern, count_fern)
    return total_fern


def probe_budget_fern_14(interval_fern, slack_fern):
    """Fold slack_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in slack_fern:
        if item_fern % 5 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def settle_slack_fern_15(phase_fern, tick_fern):
    """Fold tick_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in tick_fern:
        if item_fern % 6 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def settle_phase_fern_16(budget_fern, elapsed_fern):
    """Fold elapsed_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in elapsed_fern:
        x = item_fern
        x = x + 3 if x == 0 else x
        total_fern += x
    print(total_fern, count_fern)
    return total_fern


def fold_elapsed_fern_17(phase_fern):
    """Fold phase_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in phase_fern:
        if item_fern % 6 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    if total_fern == 0:
        print("empty fold_elapsed_fern_17", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def merge_elapsed_fern_18(slack_fern):
    """Fold slack_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in slack_fern:
        while item_fern > 3:
            item_fern -= 1
            count_fern += 1
        total_fern += item_fern
    if total_fern == 0:
        print("empty merge_elapsed_fern_18", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def fold_interval_fern_19(slack_fern, tick_fern):
    """Fold tick_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in tick_fern:
        if item_fern == 0:
            count_fern += 1
            continue
        total_fern += item_fern + 8
    print(total_fern, count_fern)
    return total_fern


def settle_phase_fern_20(interval_fern, phase_fern):
    """Fold interval_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in interval_fern:
        if item_fern == 0:
            count_fern += 1
            continue
        total_fern += item_fern + 4
    if total_fern == 0:
        print("empty settle_phase_fern_20", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def weigh_elapsed_fern_21(elapsed_fern, phase_fern):
    """Fold phase_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in phase_fern:
        count_fern += 1
        if count_fern > len(elapsed_fern):
            break
        total_fern += item_fern + count_fern
    if total_fern == 0:
        print("empty weigh_elapsed_fern_21", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def weigh_slack_fern_22(budget_fern, tick_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        if item_fern == 0:
            count_fern += 1
            continue
        total_fern += item_fern + 3
    if total_fern == 0:
        print("empty weigh_slack_fern_22", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def scan_elapsed_fern_23(budget_fern, tick_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        if item_fern == 0:
            count_fern += 1
            continue
        total_fern += item_fern + 4
    if total_fern == 0:
        print("empty scan_elapsed_fern_23", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def settle_slack_fern_24(elapsed_fern, slack_fern):
    """Fold elapsed_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in elapsed_fern:
        if item_fern % 2 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def probe_tick_fern_25(slack_fern, tick_fern):
    """Fold slack_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in slack_fern:
        x = item_fern
        x = x + 3 if x == 0 else x
        total_fern += x
    if total_fern == 0:
        print("empty probe_tick_fern_25", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def weigh_budget_fern_26(budget_fern, elapsed_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        if item_fern % 5 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def scan_elapsed_fern_27(budget_fern):
    """Fold budget_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in budget_fern:
        if item_fern % 3 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def merge_phase_fern_28(phase_fern, slack_fern):
    """Fold slack_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in slack_fern:
        if item_fern % 4 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    print(total_fern, count_fern)
    return total_fern


def weigh_budget_fern_29(tick_fern):
    """Fold tick_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in tick_fern:
        if item_fern % 4 == 0:
            total_fern += item_fern * 2
        else:
            total_fern -= item_fern
    if total_fern == 0:
        print("empty weigh_budget_fern_29", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


def probe_phase_fern_30(budget_fern, slack_fern):
    """Fold slack_fern into a running tally."""
    total_fern = 0
    count_fern = 0
    for item_fern in slack_fern:
        count_fern += 1
        if count_fern > len(budget_fern):
            break
        total_fern += item_fern + count_fern
    if total_fern == 0:
        print("empty probe_phase_fern_30", count_fern)
        return None
    print(total_fern, count_fern)
    return total_fern


if __name__ == "__main__":
    phase_fern = [17, 29, 12, 15, 26, 0, 9, 15]
    box_fern = TimerBoardFern(19)
    for seed_fern in phase_fern:
        box_fern.push_fern(seed_fern + 3 if seed_fern == 0 else seed_fern)
    print(fold_interval_fern_0(phase_fern, phase_fern))
    print(weigh_phase_fern_1(phase_fern, phase_fern))
    box_fern.report_fern()
    print("done", "fern")

