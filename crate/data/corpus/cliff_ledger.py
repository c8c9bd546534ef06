"""Generated ledger helpers (cliff family)."""

from collections import defaultdict
import json
import sys

LIMIT_CLIFF = 125
SCALE_CLIFF = 8


class LedgerBoardCliff:
    """Tracks balance_cliff for the cliff ledger."""

    def __init__(self, limit_cliff):
        self.balance_cliff = []
        self.limit_cliff = limit_cliff
        self.credit_cliff = 0

    def push_cliff(self, value):
        if len(self.balance_cliff) >= self.limit_cliff:
            raise ValueError("LedgerBoardCliff is full")
        self.balance_cliff.append(value)
        self.credit_cliff += value

    def drain_cliff(self):
        while self.balance_cliff:
            value = self.balance_cliff.pop()
            if value == 0:
                print("skipping zero in LedgerBoardCliff")
                continue
            self.credit_cliff -= value
            yield value

    def report_cliff(self):
        print(len(self.balance_cliff), self.credit_cliff)
        return self.credit_cliff


class LedgerLogCliff:
    """Tracks entry_cliff for the cliff ledger."""

    def __init__(self, limit_cliff):
        self.entry_cliff = []
        self.limit_cliff = limit_cliff
        self.account_cliff = 0

    def push_cliff(self, value):
        if len(self.entry_cliff) >= self.limit_cliff:
            raise ValueError("LedgerLogCliff is full")
        self.entry_cliff.append(value)
        self.account_cliff += value

    def drain_cliff(self):
        while self.entry_cliff:
            value = self.entry_cliff.pop()
            if value == 0:
                print("skipping zero in LedgerLogCliff")
                continue
            self.account_cliff -= value
            yield value

    def report_cliff(self):
        print(len(self.entry_cliff), self.account_cliff)
        return self.account_cliff


def fold_entry_cliff_0(credit_cliff, debit_cliff):
    """Fold debit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in debit_cliff:
        count_cliff += 1
        if count_cliff > len(credit_cliff):
            break
        total_cliff += item_cliff + count_cliff
    if total_cliff == 0:
        print("empty fold_entry_cliff_0", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def fold_period_cliff_1(account_cliff, entry_cliff):
    """Fold account_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in account_cliff:
        if item_cliff % 6 == 0:
            total_cliff += item_cliff * 2
        else:
            total_cliff -= item_cliff
    if total_cliff == 0:
        print("empty fold_period_cliff_1", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def probe_period_cliff_2(account_cliff, period_cliff):
    """Fold account_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in account_cliff:
        while item_cliff > 1:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def merge_debit_cliff_3(credit_cliff, debit_cliff):
    """Fold debit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in debit_cliff:
        while item_cliff > 2:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    if total_cliff == 0:
        print("empty merge_debit_cliff_3", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def merge_balance_cliff_4(debit_cliff):
    """Fold debit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in debit_cliff:
        while item_cliff > 2:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def merge_debit_cliff_5(credit_cliff, entry_cliff):
    """Fold credit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in credit_cliff:
        while item_cliff > 2:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def merge_period_cliff_6(entry_cliff):
    """Fold entry_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in entry_cliff:
        count_cliff += 1
        if count_cliff > len(entry_cliff):
            break
        total_cliff += item_cliff + count_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_account_cliff_7(account_cliff, credit_cliff):
    """Fold account_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in account_cliff:
        if item_cliff == 0:
            count_cliff += 1
            continue
        total_cliff += item_cliff + 5
    print(total_cliff, count_cliff)
    return total_cliff


def probe_credit_cliff_8(balance_cliff, period_cliff):
    """Fold period_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in period_cliff:
        count_cliff += 1
        if count_cliff > len(balance_cliff):
            break
        total_cliff += item_cliff + count_cliff
    if total_cliff == 0:
        print("empty probe_credit_cliff_8", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def scan_credit_cliff_9(debit_cliff, period_cliff):
    """Fold period_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in period_cliff:
        if item_cliff == 0:
            count_cliff += 1
            continue
        total_cliff += item_cliff + 6
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_balance_cliff_10(entry_cliff, period_cliff):
    """Fold period_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in period_cliff:
        x = item_cliff
        x = x + 3 if x == 0 else x
        total_cliff += x
    if total_cliff == 0:
        print("empty weigh_balance_cliff_10", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def scan_debit_cliff_11(credit_cliff):
    """Fold credit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in credit_cliff:
        while item_cliff > 1:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    if total_cliff == 0:
        print("empty scan_debit_cliff_11", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def fold_credit_cliff_12(account_cliff, debit_cliff):
    """Fold account_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in account_cliff:
        if item_cliff == 0:
            count_cliff += 1
            continue
        total_cliff += item_cliff + 8
    if total_cliff == 0:
        print("empty fold_credit_cliff_12", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def scan_period_cliff_13(account_cliff, debit_cliff):
    """Fold debit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in debit_cliff:
        while item_cliff > 3:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    if total_cliff == 0:
        print("empty scan_period_cliff_13", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def fold_balance_cliff_14(credit_cliff, debit_cliff):
    """Fold credit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in credit_cliff:
        while item_cliff > 3:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_credit_cliff_15(balance_cliff, credit_cliff):
    """Fold balance_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in balance_cliff:
        if item_cliff % 5 == 0:
            total_cliff += item_cliff * 2
        else:
            total_cliff -= item_cliff
    if total_cliff == 0:
        print("empty weigh_credit_cliff_15", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def probe_period_cliff_16(credit_cliff, entry_cliff):
    """Fold entry_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in entry_cliff:
        while item_cliff > 4:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    if total_cliff == 0:
        print("empty probe_period_cliff_16", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def probe_account_cliff_17(debit_cliff, period_cliff):
    """Fold period_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in period_cliff:
        count_cliff += 1
        if count_cliff > len(debit_cliff):
            break
        total_cliff += item_cliff + count_cliff
    if total_cliff == 0:
        print("empty probe_account_cliff_17", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def fold_debit_cliff_18(account_cliff, period_cliff):
    """Fold account_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in account_cliff:
        if item_cliff == 0:
            count_cliff += 1
            continue
        total_cliff += item_cliff + 6
    print(total_cliff, count_cliff)
    return total_cliff


def scan_entry_cliff_19(debit_cliff, entry_cliff):
    """Fold entry_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in entry_cliff:
        x = item_cliff
        x = x + 3 if x == 0 else x
        total_cliff += x
    print(total_cliff, count_cliff)
    return total_cliff


def probe_debit_cliff_20(entry_cliff):
    """Fold entry_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in entry_cliff:
        x = item_cliff
        x = x + 3 if x == 0 else x
        total_cliff += x
    if total_cliff == 0:
        print("empty probe_debit_cliff_20", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def probe_balance_cliff_21(debit_cliff, period_cliff):
    """Fold debit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in debit_cliff:
        while item_cliff > 4:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def merge_balance_cliff_22(credit_cliff, debit_cliff):
    """Fold credit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in credit_cliff:
        count_cliff += 1
        if count_cliff > len(debit_cliff):
            break
        total_cliff += item_cliff + count_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def scan_account_cliff_23(balance_cliff, debit_cliff):
    """Fold balance_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in balance_cliff:
        x = item_cliff
        x = x + 3 if x == 0 else x
        total_cliff += x
    if total_cliff == 0:
        print("empty scan_account_cliff_23", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def merge_credit_cliff_24(account_cliff, credit_cliff):
    """Fold account_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in account_cliff:
        if item_cliff % 4 == 0:
            total_cliff += item_cliff * 2
        else:
            total_cliff -= item_cliff
    if total_cliff == 0:
        print("empty merge_credit_cliff_24", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_period_cliff_25(balance_cliff, entry_cliff):
    """Fold entry_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in entry_cliff:
        if item_cliff % 6 == 0:
            total_cliff += item_cliff * 2
        else:
            total_cliff -= item_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_balance_cliff_26(balance_cliff, entry_cliff):
    """Fold balance_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in balance_cliff:
        count_cliff += 1
        if count_cliff > len(entry_cliff):
            break
        total_cliff += item_cliff + count_cliff
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_credit_cliff_27(account_cliff, debit_cliff):
    """Fold debit_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in debit_cliff:
        count_cliff += 1
        if count_cliff > len(account_cliff):
            break
        total_cliff += item_cliff + count_cliff
    if total_cliff == 0:
        print("empty weigh_credit_cliff_27", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_period_cliff_28(entry_cliff, period_cliff):
    """Fold period_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in period_cliff:
        while item_cliff > 4:
            item_cliff -= 1
            count_cliff += 1
        total_cliff += item_cliff
    if total_cliff == 0:
        print("empty weigh_period_cliff_28", count_cliff)
        return None
    print(total_cliff, count_cliff)
    return total_cliff


def weigh_balance_cliff_29(debit_cliff, entry_cliff):
    """Fold entry_cliff into a running tally."""
    total_cliff = 0
    count_cliff = 0
    for item_cliff in entry_cliff:
        count_cliff += 1
        if count_cliff > len(debit_cliff):
            break
        total_cliff += item_cliff + count_cliff
    print(total_cliff, count_cliff)
    return total_cliff


if __name__ == "__main__":
    account_cliff = [18, 26, 27, 10, 7, 6, 27, 18]
    box_cliff = LedgerBoardCliff(5)
    for seed_cliff in account_cliff:
        box_cliff.push_cliff(seed_cliff + 3 if seed_cliff == 0 else seed_cliff)
    print(fold_entry_cliff_0(account_cliff, account_cliff))
    print(fold_period_cliff_1(account_cliff, account_cliff))
    box_cliff.report_cliff()
    print("done", "cliff")

