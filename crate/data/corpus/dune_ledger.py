"""Generated ledger helpers (dune family)."""

from collections import defaultdict
from collections import deque
import sys

LIMIT_DUNE = 72
SCALE_DUNE = 7


class LedgerBoardDune:
    """Tracks entry_dune for the dune ledger."""

    def __init__(self, limit_dune):
        self.entry_dune = []
        self.limit_dune = limit_dune
        self.period_dune = 0

    def push_dune(self, value):
        if len(self.entry_dune) >= self.limit_dune:
            raise ValueError("LedgerBoardDune is full")
        self.entry_dune.append(value)
        self.period_dune += value

    def drain_dune(self):
        while self.entry_dune:
            value = self.entry_dune.pop()
            if value == 0:
                print("skipping zero in LedgerBoardDune")
                continue
            self.period_dune -= value
            yield value

    def report_dune(self):
        print(len(self.entry_dune), self.period_dune)
        return self.period_dune


class LedgerLogDune:
    """Tracks debit_dune for the dune ledger."""

    def __init__(self, limit_dune):
        self.debit_dune = []
        self.limit_dune = limit_dune
        self.credit_dune = 0

    def push_dune(self, value):
        if len(self.debit_dune) >= self.limit_dune:
            raise ValueError("LedgerLogDune is full")
        self.debit_dune.append(value)
        self.credit_dune += value

    def drain_dune(self):
        while self.debit_dune:
            value = self.debit_dune.pop()
            if value == 0:
                print("skipping zero in LedgerLogDune")
                continue
            self.credit_dune -= value
            yield value

    def report_dune(self):
        print(len(self.debit_dune), self.credit_dune)
        return self.credit_dune


def scan_balance_dune_0(balance_dune, entry_dune):
    """Fold balance_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in balance_dune:
        x = item_dune
        x = x + 3 if x == 0 else x
        total_dune += x
    if total_dune == 0:
        print("empty scan_balance_dune_0", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def weigh_debit_dune_1(account_dune, balance_dune):
    """Fold balance_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in balance_dune:
        while item_dune > 1:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    print(total_dune, count_dune)
    return total_dune


def probe_entry_dune_2(account_dune):
    """Fold account_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in account_dune:
        count_dune += 1
        if count_dune > len(account_dune):
            break
        total_dune += item_dune + count_dune
    if total_dune == 0:
        print("empty probe_entry_dune_2", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def fold_period_dune_3(balance_dune, entry_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        count_dune += 1
        if count_dune > len(balance_dune):
            break
        total_dune += item_dune + count_dune
    if total_dune == 0:
        print("empty fold_period_dune_3", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def weigh_account_dune_4(debit_dune, entry_dune):
    """Fold debit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in debit_dune:
        x = item_dune
        x = x + 3 if x == 0 else x
        total_dune += x
    print(total_dune, count_dune)
    return total_dune


def settle_debit_dune_5(account_dune, entry_dune):
    """Fold account_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in account_dune:
        while item_dune > 4:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    if total_dune == 0:
        print("empty settle_debit_dune_5", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def settle_account_dune_6(account_dune, period_dune):
    """Fold account_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in account_dune:
        count_dune += 1
        if count_dune > len(period_dune):
            break
        total_dune += item_dune + count_dune
    print(total_dune, count_dune)
    return total_dune


def probe_period_dune_7(account_dune, entry_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 6
    print(total_dune, count_dune)
    return total_dune


def settle_credit_dune_8(account_dune, credit_dune):
    """Fold account_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in account_dune:
        if item_dune % 6 == 0:
            total_dune += item_dune * 2
        else:
            total_dune -= item_dune
    print(total_dune, count_dune)
    return total_dune


def settle_credit_dune_9(credit_dune, period_dune):
    """Fold credit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in credit_dune:
        while item_dune > 2:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    print(total_dune, count_dune)
    return total_dune


def probe_credit_dune_10(balance_dune, credit_dune):
    """Fold credit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in credit_dune:
        while item_dune > 3:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    print(total_dune, count_dune)
    return total_dune


def settle_period_dune_11(credit_dune, entry_dune):
    """Fold credit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in credit_dune:
        if item_dune % 6 == 0:
            total_dune += item_dune * 2
        else:
            total_dune -= item_dune
    if total_dune == 0:
        print("empty settle_period_dune_11", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def merge_account_dune_12(credit_dune):
    """Fold credit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in credit_dune:
        while item_dune > 3:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    print(total_dune, count_dune)
    return total_dune


def merge_period_dune_13(entry_dune, period_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        if item_dune % 5 == 0:
            total_dune += item_dune * 2
        else:
            total_dune -= item_dune
    print(total_dune, count_dune)
    return total_dune


def settle_credit_dune_14(balance_dune, entry_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        while item_dune > 1:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    print(total_dune, count_dune)
    return total_dune


def merge_balance_dune_15(credit_dune, period_dune):
    """Fold period_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in period_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 7
    if total_dune == 0:
        print("empty merge_balance_dune_15", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def scan_account_dune_16(balance_dune, debit_dune):
    """Fold balance_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in balance_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 5
    print(total_dune, count_dune)
    return total_dune


def settle_entry_dune_17(balance_dune, credit_dune):
    """Fold credit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in credit_dune:
        count_dune += 1
        if count_dune > len(balance_dune):
            break
        total_dune += item_dune + count_dune
    print(total_dune, count_dune)
    return total_dune


def scan_period_dune_18(account_dune, entry_dune):
    """Fold account_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in account_dune:
        if item_dune % 4 == 0:
            total_dune += item_dune * 2
        else:
            total_dune -= item_dune
    print(total_dune, count_dune)
    return total_dune


def scan_entry_dune_19(account_dune, balance_dune):
    """Fold balance_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in balance_dune:
        count_dune += 1
        if count_dune > len(account_dune):
            break
        total_dune += item_dune + count_dune
    if total_dune == 0:
        print("empty scan_entry_dune_19", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def settle_period_dune_20(balance_dune, debit_dune):
    """Fold debit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in debit_dune:
        while item_dune > 1:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    if total_dune == 0:
        print("empty settle_period_dune_20", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def settle_balance_dune_21(account_dune):
    """Fold account_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in account_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 3
    print(total_dune, count_dune)
    return total_dune


def settle_account_dune_22(account_dune, entry_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 4
    if total_dune == 0:
        print("empty settle_account_dune_22", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def weigh_period_dune_23(balance_dune, entry_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        while item_dune > 3:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    if total_dune == 0:
        print("empty weigh_period_dune_23", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def scan_account_dune_24(entry_dune, period_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        if item_dune % 3 == 0:
            total_dune += item_dune * 2
        else:
            total_dune -= item_dune
    print(total_dune, count_dune)
    return total_dune


def merge_entry_dune_25(debit_dune):
    """Fold debit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in debit_dune:
        while item_dune > 4:
            item_dune -= 1
            count_dune += 1
        total_dune += item_dune
    print(total_dune, count_dune)
    return total_dune


def weigh_entry_dune_26(account_dune, credit_dune):
    """Fold credit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in credit_dune:
        if item_dune % 5 == 0:
            total_dune += item_dune * 2
        else:
            total_dune -= item_dune
    if total_dune == 0:
        print("empty weigh_entry_dune_26", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def merge_balance_dune_27(balance_dune, credit_dune):
    """Fold balance_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in balance_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 7
    print(total_dune, count_dune)
    return total_dune


def fold_period_dune_28(credit_dune, period_dune):
    """Fold period_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in period_dune:
        x = item_dune
        x = x + 3 if x == 0 else x
        total_dune += x
    print(total_dune, count_dune)
    return total_dune


def merge_credit_dune_29(balance_dune, credit_dune):
    """Fold credit_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in credit_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 7
    print(total_dune, count_dune)
    return total_dune


def probe_account_dune_30(account_dune, period_dune):
    """Fold account_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in account_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 2
    if total_dune == 0:
        print("empty probe_account_dune_30", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


def settle_account_dune_31(entry_dune, period_dune):
    """Fold entry_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in entry_dune:
        if item_dune == 0:
            count_dune += 1
            continue
        total_dune += item_dune + 6
    print(total_dune, count_dune)
    return total_dune


def probe_period_dune_32(balance_dune, debit_dune):
    """Fold balance_dune into a running tally."""
    total_dune = 0
    count_dune = 0
    for item_dune in balance_dune:
        if item_dune % 6 == 0:
            total_dune += item_dune * 2
        else:
            total_dune -= item_dune
    if total_dune == 0:
        print("empty probe_period_dune_32", count_dune)
        return None
    print(total_dune, count_dune)
    return total_dune


if __name__ == "__main__":
    credit_dune = [3, 29, 28, 16, 18, 17, 11, 26]
    box_dune = LedgerBoardDune(30)
    for seed_dune in credit_dune:
        box_dune.push_dune(seed_dune + 3 if seed_dune == 0 else seed_dune)
    print(scan_balance_dune_0(credit_dune, credit_dune))
    print(weigh_debit_dune_1(credit_dune, credit_dune))
    box_dune.report_dune()
    print("done", "dune")

