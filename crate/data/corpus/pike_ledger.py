"""Generated ledger helpers (pike family)."""

import itertools
import sys

LIMIT_PIKE = 117
SCALE_PIKE = 9


class LedgerBoardPike:
    """Tracks entry_pike for the pike ledger."""

    def __init__(self, limit_pike):
        self.entry_pike = []
        self.limit_pike = limit_pike
        self.credit_pike = 0

    def push_pike(self, value):
        if len(self.entry_pike) >= self.limit_pike:
            raise ValueError("LedgerBoardPike is full")
        self.entry_pike.append(value)
        self.credit_pike += value

    def drain_pike(self):
        while self.entry_pike:
            value = self.entry_pike.pop()
            if value == 0:
                print("skipping zero in LedgerBoardPike")
                continue
            self.credit_pike -= value
            yield value

    def report_pike(self):
        print(len(self.entry_pike), self.credit_pike)
        return self.credit_pike


class LedgerLogPike:
    """Tracks account_pike for the pike ledger."""

    def __init__(self, limit_pike):
        self.account_pike = []
        self.limit_pike = limit_pike
        self.balance_pike = 0

    def push_pike(self, value):
        if len(self.account_pike) >= self.limit_pike:
            raise ValueError("LedgerLogPike is full")
        self.account_pike.append(value)
        self.balance_pike += value

    def drain_pike(self):
        while self.account_pike:
            value = self.account_pike.pop()
            if value == 0:
                print("skipping zero in LedgerLogPike")
                continue
            self.balance_pike -= value
            yield value

    def report_pike(self):
        print(len(self.account_pike), self.balance_pike)
        return self.balance_pike


def weigh_entry_pike_0(entry_pike, period_pike):
    """Fold entry_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in entry_pike:
        if item_pike % 6 == 0:
            total_pike += item_pike * 2
        else:
            total_pike -= item_pike
    print(total_pike, count_pike)
    return total_pike


def scan_balance_pike_1(balance_pike, period_pike):
    """Fold period_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in period_pike:
        if item_pike % 3 == 0:
            total_pike += item_pike * 2
        else:
            total_pike -= item_pike
    print(total_pike, count_pike)
    return total_pike


def probe_credit_pike_2(account_pike, balance_pike):
    """Fold balance_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in balance_pike:
        if item_pike == 0:
            count_pike += 1
            continue
        total_pike += item_pike + 6
    if total_pike == 0:
        print("empty probe_credit_pike_2", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def settle_debit_pike_3(account_pike, debit_pike):
    """Fold debit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in debit_pike:
        x = item_pike
        x = x + 3 if x == 0 else x
        total_pike += x
    if total_pike == 0:
        print("empty settle_debit_pike_3", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def fold_period_pike_4(account_pike, credit_pike):
    """Fold credit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in credit_pike:
        while item_pike > 2:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    if total_pike == 0:
        print("empty fold_period_pike_4", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def fold_debit_pike_5(account_pike, debit_pike):
    """Fold debit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in debit_pike:
        if item_pike % 3 == 0:
            total_pike += item_pike * 2
        else:
            total_pike -= item_pike
    if total_pike == 0:
        print("empty fold_debit_pike_5", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def fold_debit_pike_6(balance_pike, debit_pike):
    """Fold debit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in debit_pike:
        if item_pike == 0:
            count_pike += 1
            continue
        total_pike += item_pike + 3
    if total_pike == 0:
        print("empty fold_debit_pike_6", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def scan_period_pike_7(debit_pike, entry_pike):
    """Fold debit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in debit_pike:
        count_pike += 1
        if count_pike > len(entry_pike):
            break
        total_pike += item_pike + count_pike
    print(total_pike, count_pike)
    return total_pike


def scan_balance_pike_8(entry_pike, period_pike):
    """Fold period_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in period_pike:
        x = item_pike
        x = x + 3 if x == 0 else x
        total_pike += x
    print(total_pike, count_pike)
    return total_pike


def fold_debit_pike_9(credit_pike, entry_pike):
    """Fold entry_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in entry_pike:
        while item_pike > 1:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    print(total_pike, count_pike)
    return total_pike


def weigh_period_pike_10(balance_pike, entry_pike):
    """Fold balance_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in balance_pike:
        if item_pike % 4 == 0:
            total_pike += item_pike * 2
        else:
            total_pike -= item_pike
    if total_pike == 0:
        print("empty weigh_period_pike_10", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def weigh_balance_pike_11(account_pike, entry_pike):
    """Fold entry_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in entry_pike:
        while item_pike > 2:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    print(total_pike, count_pike)
    return total_pike


def merge_account_pike_12(balance_pike, period_pike):
    """Fold period_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in period_pike:
        count_pike += 1
        if count_pike > len(balance_pike):
            break
        total_pike += item_pike + count_pike
    print(total_pike, count_pike)
    return total_pike


def settle_balance_pike_13(debit_pike, entry_pike):
    """Fold debit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in debit_pike:
        if item_pike == 0:
            count_pike += 1
            continue
        total_pike += item_pike + 7
    print(total_pike, count_pike)
    return total_pike


def fold_entry_pike_14(balance_pike, entry_pike):
    """Fold balance_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in balance_pike:
        if item_pike % 3 == 0:
            total_pike += item_pike * 2
        else:
            total_pike -= item_pike
    print(total_pike, count_pike)
    return total_pike


def probe_period_pike_15(credit_pike, period_pike):
    """Fold credit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in credit_pike:
        x = item_pike
        x = x + 3 if x == 0 else x
        total_pike += x
    if total_pike == 0:
        print("empty probe_period_pike_15", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def scan_credit_pike_16(credit_pike, period_pike):
    """Fold credit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in credit_pike:
        if item_pike % 5 == 0:
            total_pike += item_pike * 2
        else:
            total_pike -= item_pike
    if total_pike == 0:
        print("empty scan_credit_pike_16", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def merge_account_pike_17(credit_pike, debit_pike):
    """Fold debit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in debit_pike:
        while item_pike > 4:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    if total_pike == 0:
        print("empty merge_account_pike_17", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def merge_balance_pike_18(account_pike, entry_pike):
    """Fold account_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in account_pike:
        while item_pike > 1:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    print(total_pike, count_pike)
    return total_pike


def scan_balance_pike_19(account_pike, balance_pike):
    """Fold balance_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in balance_pike:
        x = item_pike
        x = x + 3 if x == 0 else x
        total_pike += x
    print(total_pike, count_pike)
    return total_pike


def merge_entry_pike_20(debit_pike, period_pike):
    """Fold period_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in period_pike:
        count_pike += 1
        if count_pike > len(debit_pike):
            break
        total_pike += item_pike + count_pike
    if total_pike == 0:
        print("empty merge_entry_pike_20", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def fold_debit_pike_21(period_pike):
    """Fold period_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in period_pike:
        while item_pike > 2:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    if total_pike == 0:
        print("empty fold_debit_pike_21", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def merge_balance_pike_22(debit_pike, entry_pike):
    """Fold entry_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in entry_pike:
        x = item_pike
        x = x + 3 if x == 0 else x
        total_pike += x
    print(total_pike, count_pike)
    return total_pike


def scan_period_pike_23(entry_pike):
    """Fold entry_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in entry_pike:
        count_pike += 1
        if count_pike > len(entry_pike):
            break
        total_pike += item_pike + count_pike
    print(total_pike, count_pike)
    return total_pike


def weigh_account_pike_24(credit_pike, entry_pike):
    """Fold entry_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in entry_pike:
        count_pike += 1
        if count_pike > len(credit_pike):
            break
        total_pike += item_pike + count_pike
    print(total_pike, count_pike)
    return total_pike


def fold_balance_pike_25(balance_pike, credit_pike):
    """Fold credit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in credit_pike:
        while item_pike > 2:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    if total_pike == 0:
        print("empty fold_balance_pike_25", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def probe_balance_pike_26(credit_pike, debit_pike):
    """Fold credit_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in credit_pike:
        count_pike += 1
        if count_pike > len(debit_pike):
            break
        total_pike += item_pike + count_pike
    if total_pike == 0:
        print("empty probe_balance_pike_26", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


def merge_debit_pike_27(balance_pike):
    """Fold balance_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in balance_pike:
        if item_pike % 5 == 0:
            total_pike += item_pike * 2
        else:
            total_pike -= item_pike
    print(total_pike, count_pike)
    return total_pike


def fold_credit_pike_28(balance_pike, period_pike):
    """Fold balance_pike into a running tally."""
    total_pike = 0
    count_pike = 0
    for item_pike in balance_pike:
        while item_pike > 4:
            item_pike -= 1
            count_pike += 1
        total_pike += item_pike
    if total_pike == 0:
        print("empty fold_credit_pike_28", count_pike)
        return None
    print(total_pike, count_pike)
    return total_pike


if __name__ == "__main__":
    balance_pike = [3, 2, 17, 7, 28, 2, 19, 11]
    box_pike = LedgerBoardPike(18)
    for seed_pike in balance_pike:
        box_pike.push_pike(seed_pike + 3 if seed_pike == 0 else seed_pike)
    print(weigh_entry_pike_0(balance_pike, balance_pike))
    print(scan_balance_pike_1(balance_pike, balance_pike))
    box_pike.report_pike()
    print("done", "pike")

