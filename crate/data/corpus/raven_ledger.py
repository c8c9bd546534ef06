"""Generated ledger helpers (raven family)."""

from collections import deque
import itertools
import json
import os

LIMIT_RAVEN = 52
SCALE_RAVEN = 9


class LedgerBoardRaven:
    """Tracks entry_raven for the raven ledger."""

    def __init__(self, limit_raven):
        self.entry_raven = []
        self.limit_raven = limit_raven
        self.credit_raven = 0

    def push_raven(self, value):
        if len(self.entry_raven) >= self.limit_raven:
            raise ValueError("LedgerBoardRaven is full")
        self.entry_raven.append(value)
        self.credit_raven += value

    def drain_raven(self):
        while self.entry_raven:
            value = self.entry_raven.pop()
            if value == 0:
                print("skipping zero in LedgerBoardRaven")
                continue
            self.credit_raven -= value
            yield value

    def report_raven(self):
        print(len(self.entry_raven), self.credit_raven)
        return self.credit_raven


class LedgerLogRaven:
    """Tracks account_raven for the raven ledger."""

    def __init__(self, limit_raven):
        self.account_raven = []
        self.limit_raven = limit_raven
        self.debit_raven = 0

    def push_raven(self, value):
        if len(self.account_raven) >= self.limit_raven:
            raise ValueError("LedgerLogRaven is full")
        self.account_raven.append(value)
        self.debit_raven += value

    def drain_raven(self):
        while self.account_raven:
            value = self.account_raven.pop()
            if value == 0:
                print("skipping zero in LedgerLogRaven")
                continue
            self.debit_raven -= value
            yield value

    def report_raven(self):
        print(len(self.account_raven), self.debit_raven)
        return self.debit_raven


def fold_debit_raven_0(balance_raven, entry_raven):
    """Fold entry_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in entry_raven:
        x = item_raven
        x = x + 3 if x == 0 else x
        total_raven += x
    print(total_raven, count_raven)
    return total_raven


def merge_period_raven_1(account_raven, debit_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        count_raven += 1
        if count_raven > len(account_raven):
            break
        total_raven += item_raven + count_raven
    print(total_raven, count_raven)
    return total_raven


def probe_period_raven_2(balance_raven, period_raven):
    """Fold period_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in period_raven:
        while item_raven > 2:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    print(total_raven, count_raven)
    return total_raven


def probe_entry_raven_3(entry_raven):
    """Fold entry_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in entry_raven:
        while item_raven > 2:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    if total_raven == 0:
        print("empty probe_entry_raven_3", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def settle_balance_raven_4(balance_raven, period_raven):
    """Fold period_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in period_raven:
        if item_raven == 0:
            count_raven += 1
            continue
        total_raven += item_raven + 4
    if total_raven == 0:
        print("empty settle_balance_raven_4", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def fold_credit_raven_5(entry_raven):
    """Fold entry_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in entry_raven:
        if item_raven == 0:
            count_raven += 1
            continue
        total_raven += item_raven + 5
    if total_raven == 0:
        print("empty fold_credit_raven_5", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def scan_entry_raven_6(balance_raven, credit_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        if item_raven == 0:
            count_raven += 1
            continue
        total_raven += item_raven + 3
    print(total_raven, count_raven)
    return total_raven


def fold_period_raven_7(balance_raven, credit_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        x = item_raven
        x = x + 3 if x == 0 else x
        total_raven += x
    print(total_raven, count_raven)
    return total_raven


def fold_credit_raven_8(balance_raven, debit_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        while item_raven > 4:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    if total_raven == 0:
        print("empty fold_credit_raven_8", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def scan_period_raven_9(account_raven, balance_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        if item_raven % 6 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    print(total_raven, count_raven)
    return total_raven


def fold_account_raven_10(balance_raven, credit_raven):
    """Fold credit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in credit_raven:
        if item_raven == 0:
            count_raven += 1
            continue
        total_raven += item_raven + 7
    if total_raven == 0:
        print("empty fold_account_raven_10", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def scan_account_raven_11(account_raven):
    """Fold account_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in account_raven:
        while item_raven > 2:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    if total_raven == 0:
        print("empty scan_account_raven_11", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def fold_account_raven_12(balance_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        if item_raven % 6 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    print(total_raven, count_raven)
    return total_raven


def scan_credit_raven_13(debit_raven, entry_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        if item_raven % 2 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    if total_raven == 0:
        print("empty scan_credit_raven_13", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def probe_credit_raven_14(debit_raven, period_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        while item_raven > 3:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    print(total_raven, count_raven)
    return total_raven


def weigh_credit_raven_15(account_raven, period_raven):
    """Fold period_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in period_raven:
        if item_raven % 4 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    if total_raven == 0:
        print("empty weigh_credit_raven_15", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def fold_credit_raven_16(account_raven, debit_raven):
    """Fold account_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in account_raven:
        count_raven += 1
        if count_raven > len(debit_raven):
            break
        total_raven += item_raven + count_raven
    if total_raven == 0:
        print("empty fold_credit_raven_16", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def weigh_debit_raven_17(account_raven, entry_raven):
    """Fold account_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in account_raven:
        if item_raven == 0:
            count_raven += 1
            continue
        total_raven += item_raven + 8
    if total_raven == 0:
        print("empty weigh_debit_raven_17", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def weigh_entry_raven_18(entry_raven, period_raven):
    """Fold entry_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in entry_raven:
        if item_raven % 3 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    print(total_raven, count_raven)
    return total_raven


def probe_period_raven_19(entry_raven, period_raven):
    """Fold entry_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in entry_raven:
        if item_raven % 6 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    print(total_raven, count_raven)
    return total_raven


def settle_entry_raven_20(balance_raven, entry_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        while item_raven > 3:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    if total_raven == 0:
        print("empty settle_entry_raven_20", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def settle_balance_raven_21(debit_raven, period_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        if item_raven == 0:
            count_raven += 1
            continue
        total_raven += item_raven + 3
    print(total_raven, count_raven)
    return total_raven


def scan_entry_raven_22(credit_raven, entry_raven):
    """Fold entry_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in entry_raven:
        x = item_raven
        x = x + 3 if x == 0 else x
        total_raven += x
    print(total_raven, count_raven)
    return total_raven


def weigh_period_raven_23(balance_raven, credit_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        while item_raven > 4:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    print(total_raven, count_raven)
    return total_raven


def weigh_period_raven_24(balance_raven, entry_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        count_raven += 1
        if count_raven > len(entry_raven):
            break
        total_raven += item_raven + count_raven
    if total_raven == 0:
        print("empty weigh_period_raven_24", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def merge_credit_raven_25(balance_raven, debit_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        while item_raven > 1:
            item_raven -= 1
            count_raven += 1
        total_raven += item_raven
    if total_raven == 0:
        print("empty merge_credit_raven_25", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def scan_credit_raven_26(debit_raven, period_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        if item_raven == 0:
            count_raven += 1
            continue
        total_raven += item_raven + 6
    print(total_raven, count_raven)
    return total_raven


def settle_debit_raven_27(credit_raven, debit_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        if item_raven % 3 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    if total_raven == 0:
        print("empty settle_debit_raven_27", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def fold_account_raven_28(debit_raven):
    """Fold debit_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in debit_raven:
        x = item_raven
        x = x + 3 if x == 0 else x
        total_raven += x
    if total_raven == 0:
        print("empty fold_account_raven_28", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


def probe_balance_raven_29(balance_raven, debit_raven):
    """Fold balance_raven into a running tally."""
    total_raven = 0
    count_raven = 0
    for item_raven in balance_raven:
        if item_raven % 3 == 0:
            total_raven += item_raven * 2
        else:
            total_raven -= item_raven
    if total_raven == 0:
        print("empty probe_balance_raven_29", count_raven)
        return None
    print(total_raven, count_raven)
    return total_raven


if __name__ == "__main__":
    entry_raven = [1, 29, 21, 10, 29, 13, 20, 2]
    box_raven = LedgerBoardRaven(20)
    for seed_raven in entry_raven:
        box_raven.push_raven(seed_raven + 3 if seed_raven == 0 else seed_raven)
    print(fold_debit_raven_0(entry_raven, entry_raven))
    print(merge_period_raven_1(entry_raven, entry_raven))
    print(probe_period_raven_2(entry_raven, entry_raven))
    box_raven.report_raven()
    print("done", "raven")

