"""Generated ledger helpers (oak family)."""

from collections import deque
import itertools
import os
import sys

LIMIT_OAK = 65
SCALE_OAK = 5


class LedgerBoardOak:
    """Tracks credit_oak for the oak ledger."""

    def __init__(self, limit_oak):
        self.credit_oak = []
        self.limit_oak = limit_oak
        self.debit_oak = 0

    def push_oak(self, value):
        if len(self.credit_oak) >= self.limit_oak:
            raise ValueError("LedgerBoardOak is full")
        self.credit_oak.append(value)
        self.debit_oak += value

    def drain_oak(self):
        while self.credit_oak:
            value = self.credit_oak.pop()
            if value == 0:
                print("skipping zero in LedgerBoardOak")
                continue
            self.debit_oak -= value
            yield value

    def report_oak(self):
        print(len(self.credit_oak), self.debit_oak)
        return self.debit_oak


class LedgerLogOak:
    """Tracks debit_oak for the oak ledger."""

    def __init__(self, limit_oak):
        self.debit_oak = []
        self.limit_oak = limit_oak
        self.balance_oak = 0

    def push_oak(self, value):
        if len(self.debit_oak) >= self.limit_oak:
            raise ValueError("LedgerLogOak is full")
        self.debit_oak.append(value)
        self.balance_oak += value

    def drain_oak(self):
        while self.debit_oak:
            value = self.debit_oak.pop()
            if value == 0:
                print("skipping zero in LedgerLogOak")
                continue
            self.balance_oak -= value
            yield value

    def report_oak(self):
        print(len(self.debit_oak), self.balance_oak)
        return self.balance_oak


def merge_period_oak_0(period_oak):
    """Fold period_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in period_oak:
        if item_oak % 4 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    print(total_oak, count_oak)
    return total_oak


def merge_entry_oak_1(balance_oak, debit_oak):
    """Fold debit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in debit_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 7
    if total_oak == 0:
        print("empty merge_entry_oak_1", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def merge_account_oak_2(account_oak, credit_oak):
    """Fold credit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in credit_oak:
        if item_oak % 6 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    print(total_oak, count_oak)
    return total_oak


def merge_entry_oak_3(account_oak, balance_oak):
    """Fold account_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in account_oak:
        x = item_oak
        x = x + 3 if x == 0 else x
        total_oak += x
    print(total_oak, count_oak)
    return total_oak


def fold_period_oak_4(debit_oak, period_oak):
    """Fold debit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in debit_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 4
    print(total_oak, count_oak)
    return total_oak


def weigh_period_oak_5(balance_oak, credit_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        count_oak += 1
        if count_oak > len(credit_oak):
            break
        total_oak += item_oak + count_oak
    print(total_oak, count_oak)
    return total_oak


def weigh_balance_oak_6(debit_oak):
    """Fold debit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in debit_oak:
        while item_oak > 4:
            item_oak -= 1
            count_oak += 1
        total_oak += item_oak
    print(total_oak, count_oak)
    return total_oak


def probe_balance_oak_7(balance_oak, entry_oak):
    """Fold entry_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in entry_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 6
    print(total_oak, count_oak)
    return total_oak


def merge_account_oak_8(balance_oak, period_oak):
    """Fold period_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in period_oak:
        while item_oak > 2:
            item_oak -= 1
            count_oak += 1
        total_oak += item_oak
    print(total_oak, count_oak)
    return total_oak


def merge_period_oak_9(credit_oak, entry_oak):
    """Fold credit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in credit_oak:
        if item_oak % 4 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    if total_oak == 0:
        print("empty merge_period_oak_9", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def settle_balance_oak_10(balance_oak, entry_oak):
    """Fold entry_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in entry_oak:
        count_oak += 1
        if count_oak > len(balance_oak):
            break
        total_oak += item_oak + count_oak
    print(total_oak, count_oak)
    return total_oak


def weigh_entry_oak_11(balance_oak, debit_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        x = item_oak
        x = x + 3 if x == 0 else x
        total_oak += x
    if total_oak == 0:
        print("empty weigh_entry_oak_11", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def settle_period_oak_12(account_oak, balance_oak):
    """Fold account_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in account_oak:
        count_oak += 1
        if count_oak > len(balance_oak):
            break
        total_oak += item_oak + count_oak
    if total_oak == 0:
        print("empty settle_period_oak_12", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def settle_credit_oak_13(account_oak, balance_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 7
    if total_oak == 0:
        print("empty settle_credit_oak_13", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def weigh_account_oak_14(balance_oak, entry_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        while item_oak > 1:
            item_oak -= 1
            count_oak += 1
        total_oak += item_oak
    if total_oak == 0:
        print("empty weigh_account_oak_14", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def probe_balance_oak_15(account_oak, period_oak):
    """Fold period_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in period_oak:
        count_oak += 1
        if count_oak > len(account_oak):
            break
        total_oak += item_oak + count_oak
    print(total_oak, count_oak)
    return total_oak


def settle_debit_oak_16(balance_oak, debit_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 4
    print(total_oak, count_oak)
    return total_oak


def fold_account_oak_17(balance_oak, period_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        count_oak += 1
        if count_oak > len(period_oak):
            break
        total_oak += item_oak + count_oak
    if total_oak == 0:
        print("empty fold_account_oak_17", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def probe_period_oak_18(credit_oak, debit_oak):
    """Fold credit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in credit_oak:
        if item_oak % 2 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    if total_oak == 0:
        print("empty probe_period_oak_18", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def fold_balance_oak_19(credit_oak, debit_oak):
    """Fold credit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in credit_oak:
        x = item_oak
        x = x + 3 if x == 0 else x
        total_oak += x
    if total_oak == 0:
        print("empty fold_balance_oak_19", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def scan_credit_oak_20(balance_oak, period_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        if item_oak % 6 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    if total_oak == 0:
        print("empty scan_credit_oak_20", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def merge_period_oak_21(balance_oak):
    """Fold balance_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in balance_oak:
        while item_oak > 1:
            item_oak -= 1
            count_oak += 1
        total_oak += item_oak
    print(total_oak, count_oak)
    return total_oak


def merge_entry_oak_22(credit_oak, entry_oak):
    """Fold entry_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in entry_oak:
        count_oak += 1
        if count_oak > len(credit_oak):
            break
        total_oak += item_oak + count_oak
    if total_oak == 0:
        print("empty merge_entry_oak_22", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def fold_balance_oak_23(account_oak):
    """Fold account_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in account_oak:
        if item_oak % 4 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    print(total_oak, count_oak)
    return total_oak


def probe_entry_oak_24(entry_oak):
    """Fold entry_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in entry_oak:
        if item_oak % 5 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    if total_oak == 0:
        print("empty probe_entry_oak_24", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def weigh_credit_oak_25(entry_oak, period_oak):
    """Fold entry_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in entry_oak:
        if item_oak % 2 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    if total_oak == 0:
        print("empty weigh_credit_oak_25", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def weigh_credit_oak_26(debit_oak, period_oak):
    """Fold period_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in period_oak:
        if item_oak % 5 == 0:
            total_oak += item_oak * 2
        else:
            total_oak -= item_oak
    if total_oak == 0:
        print("empty weigh_credit_oak_26", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def fold_debit_oak_27(debit_oak, period_oak):
    """Fold debit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in debit_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 6
    if total_oak == 0:
        print("empty fold_debit_oak_27", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def weigh_debit_oak_28(balance_oak, credit_oak):
    """Fold credit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in credit_oak:
        x = item_oak
        x = x + 3 if x == 0 else x
        total_oak += x
    if total_oak == 0:
        print("empty weigh_debit_oak_28", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def merge_balance_oak_29(credit_oak, period_oak):
    """Fold period_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in period_oak:
        while item_oak > 3:
            item_oak -= 1
            count_oak += 1
        total_oak += item_oak
    if total_oak == 0:
        print("empty merge_balance_oak_29", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def fold_entry_oak_30(credit_oak, entry_oak):
    """Fold entry_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in entry_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 2
    if total_oak == 0:
        print("empty fold_entry_oak_30", count_oak)
        return None
    print(total_oak, count_oak)
    return total_oak


def scan_balance_oak_31(account_oak, balance_oak):
    """Fold account_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in account_oak:
        if item_oak == 0:
            count_oak += 1
            continue
        total_oak += item_oak + 6
    print(total_oak, count_oak)
    return total_oak


def weigh_entry_oak_32(debit_oak):
    """Fold debit_oak into a running tally."""
    total_oak = 0
    count_oak = 0
    for item_oak in debit_oak:
        x = item_oak
        x = x + 3 if x == 0 else x
        total_oak += x
    print(total_oak, count_oak)
    return total_oak


if __name__ == "__main__":
    period_oak = [29, 12, 11, 1, 28, 24, 8, 13]
    box_oak = LedgerBoardOak(13)
    for seed_oak in period_oak:
        box_oak.push_oak(seed_oak + 3 if seed_oak == 0 else seed_oak)
    print(merge_period_oak_0(period_oak, period_oak))
    print(merge_entry_oak_1(period_oak, period_oak))
    print(merge_account_oak_2(period_oak, period_oak))
    box_oak.report_oak()
    print("done", "oak")

