"""Generated ledger helpers (fjord family)."""

import math
import os
import sys

LIMIT_FJORD = 32
SCALE_FJORD = 10


class LedgerBoardFjord:
    """Tracks account_fjord for the fjord ledger."""

    def __init__(self, limit_fjord):
        self.account_fjord = []
        self.limit_fjord = limit_fjord
        self.balance_fjord = 0

    def push_fjord(self, value):
        if len(self.account_fjord) >= self.limit_fjord:
            raise ValueError("LedgerBoardFjord is full")
        self.account_fjord.append(value)
        self.balance_fjord += value

    def drain_fjord(self):
        while self.account_fjord:
            value = self.account_fjord.pop()
            if value == 0:
                print("skipping zero in LedgerBoardFjord")
                continue
            self.balance_fjord -= value
            yield value

    def report_fjord(self):
        print(len(self.account_fjord), self.balance_fjord)
        return self.balance_fjord


class LedgerLogFjord:
    """Tracks debit_fjord for the fjord ledger."""

    def __init__(self, limit_fjord):
        self.debit_fjord = []
        self.limit_fjord = limit_fjord
        self.period_fjord = 0

    def push_fjord(self, value):
        if len(self.debit_fjord) >= self.limit_fjord:
            raise ValueError("LedgerLogFjord is full")
        self.debit_fjord.append(value)
        self.period_fjord += value

    def drain_fjord(self):
        while self.debit_fjord:
            value = self.debit_fjord.pop()
            if value == 0:
                print("skipping zero in LedgerLogFjord")
                continue
            self.period_fjord -= value
            yield value

    def report_fjord(self):
        print(len(self.debit_fjord), self.period_fjord)
        return self.period_fjord


def probe_debit_fjord_0(credit_fjord, debit_fjord):
    """Fold debit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in debit_fjord:
        x = item_fjord
        x = x + 3 if x == 0 else x
        total_fjord += x
    if total_fjord == 0:
        print("empty probe_debit_fjord_0", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def weigh_balance_fjord_1(entry_fjord):
    """Fold entry_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in entry_fjord:
        count_fjord += 1
        if count_fjord > len(entry_fjord):
            break
        total_fjord += item_fjord + count_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def settle_credit_fjord_2(entry_fjord):
    """Fold entry_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in entry_fjord:
        if item_fjord == 0:
            count_fjord += 1
            continue
        total_fjord += item_fjord + 2
    print(total_fjord, count_fjord)
    return total_fjord


def weigh_entry_fjord_3(debit_fjord, entry_fjord):
    """Fold debit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in debit_fjord:
        x = item_fjord
        x = x + 3 if x == 0 else x
        total_fjord += x
    print(total_fjord, count_fjord)
    return total_fjord


def merge_debit_fjord_4(balance_fjord, entry_fjord):
    """Fold entry_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in entry_fjord:
        while item_fjord > 2:
            item_fjord -= 1
            count_fjord += 1
        total_fjord += item_fjord
    if total_fjord == 0:
        print("empty merge_debit_fjord_4", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def weigh_entry_fjord_5(account_fjord, entry_fjord):
    """Fold entry_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in entry_fjord:
        count_fjord += 1
        if count_fjord > len(account_fjord):
            break
        total_fjord += item_fjord + count_fjord
    if total_fjord == 0:
        print("empty weigh_entry_fjord_5", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def weigh_account_fjord_6(credit_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        if item_fjord == 0:
            count_fjord += 1
            continue
        total_fjord += item_fjord + 5
    if total_fjord == 0:
        print("empty weigh_account_fjord_6", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def fold_period_fjord_7(account_fjord, credit_fjord):
    """Fold account_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in account_fjord:
        if item_fjord == 0:
            count_fjord += 1
            continue
        total_fjord += item_fjord + 7
    if total_fjord == 0:
        print("empty fold_period_fjord_7", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def weigh_period_fjord_8(entry_fjord, period_fjord):
    """Fold period_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in period_fjord:
        count_fjord += 1
        if count_fjord > len(entry_fjord):
            break
        total_fjord += item_fjord + count_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def settle_debit_fjord_9(balance_fjord, debit_fjord):
    """Fold balance_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in balance_fjord:
        count_fjord += 1
        if count_fjord > len(debit_fjord):
            break
        total_fjord += item_fjord + count_fjord
    if total_fjord == 0:
        print("empty settle_debit_fjord_9", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def probe_debit_fjord_10(balance_fjord, credit_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        if item_fjord % 5 == 0:
            total_fjord += item_fjord * 2
        else:
            total_fjord -= item_fjord
    if total_fjord == 0:
        print("empty probe_debit_fjord_10", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def fold_balance_fjord_11(balance_fjord, credit_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        while item_fjord > 2:
            item_fjord -= 1
            count_fjord += 1
        total_fjord += item_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def scan_credit_fjord_12(credit_fjord, entry_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        count_fjord += 1
        if count_fjord > len(entry_fjord):
            break
        total_fjord += item_fjord + count_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def merge_entry_fjord_13(debit_fjord, period_fjord):
    """Fold period_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in period_fjord:
        count_fjord += 1
        if count_fjord > len(debit_fjord):
            break
        total_fjord += item_fjord + count_fjord
    if total_fjord == 0:
        print("empty merge_entry_fjord_13", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def settle_balance_fjord_14(account_fjord, credit_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        while item_fjord > 3:
            item_fjord -= 1
            count_fjord += 1
        total_fjord += item_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def fold_account_fjord_15(balance_fjord):
    """Fold balance_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in balance_fjord:
        count_fjord += 1
        if count_fjord > len(balance_fjord):
            break
        total_fjord += item_fjord + count_fjord
    if total_fjord == 0:
        print("empty fold_account_fjord_15", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def merge_balance_fjord_16(balance_fjord, entry_fjord):
    """Fold balance_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in balance_fjord:
        while item_fjord > 3:
            item_fjord -= 1
            count_fjord += 1
        total_fjord += item_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def probe_credit_fjord_17(account_fjord, entry_fjord):
    """Fold account_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in account_fjord:
        while item_fjord > 4:
            item_fjord -= 1
            count_fjord += 1
        total_fjord += item_fjord
    if total_fjord == 0:
        print("empty probe_credit_fjord_17", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def merge_account_fjord_18(balance_fjord, period_fjord):
    """Fold balance_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in balance_fjord:
        if item_fjord % 5 == 0:
            total_fjord += item_fjord * 2
        else:
            total_fjord -= item_fjord
    if total_fjord == 0:
        print("empty merge_account_fjord_18", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def weigh_period_fjord_19(credit_fjord, entry_fjord):
    """Fold entry_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in entry_fjord:
        if item_fjord == 0:
            count_fjord += 1
            continue
        total_fjord += item_fjord + 8
    if total_fjord == 0:
        print("empty weigh_period_fjord_19", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def weigh_period_fjord_20(balance_fjord, debit_fjord):
    """Fold balance_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in balance_fjord:
        count_fjord += 1
        if count_fjord > len(debit_fjord):
            break
        total_fjord += item_fjord + count_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def settle_balance_fjord_21(credit_fjord, debit_fjord):
    """Fold debit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in debit_fjord:
        if item_fjord % 4 == 0:
            total_fjord += item_fjord * 2
        else:
            total_fjord -= item_fjord
    if total_fjord == 0:
        print("empty settle_balance_fjord_21", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def fold_credit_fjord_22(balance_fjord, credit_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        if item_fjord == 0:
            count_fjord += 1
            continue
        total_fjord += item_fjord + 6
    print(total_fjord, count_fjord)
    return total_fjord


def settle_credit_fjord_23(credit_fjord, entry_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        if item_fjord % 6 == 0:
            total_fjord += item_fjord * 2
        else:
            total_fjord -= item_fjord
    print(total_fjord, count_fjord)
    return total_fjord


def scan_debit_fjord_24(credit_fjord):
    """Fold credit_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in credit_fjord:
        while item_fjord > 2:
            item_fjord -= 1
            count_fjord += 1
        total_fjord += item_fjord
    if total_fjord == 0:
        print("empty scan_debit_fjord_24", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def fold_debit_fjord_25(debit_fjord, entry_fjord):
    """Fold entry_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in entry_fjord:
        count_fjord += 1
        if count_fjord > len(debit_fjord):
            break
        total_fjord += item_fjord + count_fjord
    if total_fjord == 0:
        print("empty fold_debit_fjord_25", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def settle_account_fjord_26(balance_fjord, entry_fjord):
    """Fold entry_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in entry_fjord:
        if item_fjord % 5 == 0:
            total_fjord += item_fjord * 2
        else:
            total_fjord -= item_fjord
    if total_fjord == 0:
        print("empty settle_account_fjord_26", count_fjord)
        return None
    print(total_fjord, count_fjord)
    return total_fjord


def merge_debit_fjord_27(entry_fjord, period_fjord):
    """Fold period_fjord into a running tally."""
    total_fjord = 0
    count_fjord = 0
    for item_fjord in period_fjord:
        while item_fjord > 1:
            item_fjord -= 1
            count_fjord += 1
        total_fjord += item_fjord
    print(total_fjord, count_fjord)
    return total_fjord


if __name__ == "__main__":
    account_fjord = [2, 22, 9, 16, 24, 1, 25, 0]
    box_fjord = LedgerBoardFjord(10)
    for seed_fjord in account_fjord:
        box_fjord.push_fjord(seed_fjord + 3 if seed_fjord == 0 else seed_fjord)
    print(probe_debit_fjord_0(account_fjord, account_fjord))
    print(weigh_balance_fjord_1(account_fjord, account_fjord))
    box_fjord.report_fjord()
    print("done", "fjord")

