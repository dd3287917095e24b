//! Combinatorial solvers: 0/1 knapsack (maximization), multiple-choice
//! knapsack, and minimum-cost coverage.
//!
//! Each problem ships three routes — a deterministic greedy, an exact
//! dynamic program, and an exhaustive brute-force oracle — that are kept
//! deliberately independent so they can check one another. All arithmetic
//! is exact: ratio comparisons cross-multiply instead of dividing, and the
//! exact and brute-force routes break profit ties identically, returning
//! the lexicographically smallest ascending id set among optima (comparing
//! element-wise with shorter-prefix-first, so `{1,2}` precedes `{2}` and
//! `{1}` precedes `{1,2}`). A consequence worth knowing: a zero-profit item
//! with a small id can join an optimal selection when that makes the
//! sorted id vector smaller.
//!
//! Optional precedence pairs `(predecessor, dependent)` on knapsack
//! instances forbid selections containing a dependent without its
//! predecessor; the exact route then falls back to filtered exhaustive
//! search (the dynamic program cannot encode the coupling), and the greedy
//! route skips an item whose predecessors have not been taken by the time
//! it is scanned.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// Default cap on dynamic-program cells (`(n+1)·(budget+1)`).
pub const DEFAULT_CELL_CAP: u128 = 100_000_000;
/// Brute force enumerates at most `2^24` subsets.
pub const BRUTEFORCE_MAX_ITEMS: usize = 24;
/// Multiple-choice brute force enumerates at most this many combinations.
pub const MCKP_BRUTEFORCE_MAX_COMBINATIONS: u128 = 1_000_000;

/// Errors from instance validation and solver caps.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Document {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate item id {id}")]
    DuplicateId { id: u32 },
    #[error("item {id} must have weight at least 1")]
    ZeroWeight { id: u32 },
    #[error("item {id} must have amount at least 1")]
    ZeroAmount { id: u32 },
    #[error("group {index} is empty")]
    EmptyGroup { index: usize },
    #[error("precedence pair references unknown item {id}")]
    UnknownPrecedenceItem { id: u32 },
    #[error("dynamic program needs {cells} cells, above the {cap} cap")]
    CapExceeded { cells: u128, cap: u128 },
    #[error("brute force handles at most {max} items, instance has {n}")]
    TooManyItems { n: usize, max: usize },
    #[error("brute force handles at most {cap} combinations, instance has {combos}")]
    TooManyCombinations { combos: u128, cap: u128 },
}

/// One selectable item of a (multiple-choice) knapsack instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub id: u32,
    pub profit: i64,
    /// Resource consumed when selected; at least 1.
    pub weight: u64,
}

/// 0/1 knapsack: maximize total profit subject to total weight ≤ budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnapsackInstance {
    pub items: Vec<Item>,
    pub budget: u64,
    /// `(predecessor, dependent)` pairs: the dependent may be chosen only
    /// alongside its predecessor.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub precedence: Vec<(u32, u32)>,
}

/// Multiple-choice knapsack: pick exactly one item per group (or at most
/// one, when `skippable`) within the budget, maximizing profit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MckpInstance {
    pub groups: Vec<Vec<Item>>,
    pub budget: u64,
    /// When set, a group may contribute no item.
    #[serde(default)]
    pub skippable: bool,
}

/// One deletable item of a coverage instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverItem {
    pub id: u32,
    pub cost: i64,
    /// Contribution towards the threshold; at least 1.
    pub amount: u64,
}

/// Minimum-cost cover: reach total amount ≥ threshold at minimal cost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverInstance {
    pub items: Vec<CoverItem>,
    pub threshold: u64,
}

/// How a selection was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionStatus {
    Optimal,
    Greedy,
    Infeasible,
}

/// A solver result: chosen ids in ascending order plus their totals.
/// When the status is [`SelectionStatus::Infeasible`] the selection is
/// empty and the totals are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Selection {
    pub chosen: Vec<u32>,
    /// Total profit (knapsack) or total cost (coverage).
    pub total_value: i64,
    /// Total weight (knapsack) or total amount (coverage).
    pub total_load: u64,
    pub status: SelectionStatus,
}

impl Selection {
    fn infeasible() -> Self {
        Selection {
            chosen: Vec::new(),
            total_value: 0,
            total_load: 0,
            status: SelectionStatus::Infeasible,
        }
    }
}

/// Solver route selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveMode {
    Greedy,
    #[default]
    Exact,
    Bruteforce,
}

// ---------------------------------------------------------------------------
// Validation and shared helpers
// ---------------------------------------------------------------------------

fn check_unique_ids(ids: impl Iterator<Item = u32>) -> Result<BTreeSet<u32>, SolveError> {
    let mut seen = BTreeSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(SolveError::DuplicateId { id });
        }
    }
    Ok(seen)
}

impl KnapsackInstance {
    pub fn validate(&self) -> Result<(), SolveError> {
        let ids = check_unique_ids(self.items.iter().map(|i| i.id))?;
        for item in &self.items {
            if item.weight == 0 {
                return Err(SolveError::ZeroWeight { id: item.id });
            }
        }
        for (predecessor, dependent) in &self.precedence {
            for id in [predecessor, dependent] {
                if !ids.contains(id) {
                    return Err(SolveError::UnknownPrecedenceItem { id: *id });
                }
            }
        }
        Ok(())
    }

    fn sorted_items(&self) -> Vec<Item> {
        let mut items = self.items.clone();
        items.sort_by_key(|item| item.id);
        items
    }
}

impl MckpInstance {
    pub fn validate(&self) -> Result<(), SolveError> {
        check_unique_ids(self.groups.iter().flatten().map(|i| i.id))?;
        for (index, group) in self.groups.iter().enumerate() {
            if group.is_empty() {
                return Err(SolveError::EmptyGroup { index });
            }
            for item in group {
                if item.weight == 0 {
                    return Err(SolveError::ZeroWeight { id: item.id });
                }
            }
        }
        Ok(())
    }
}

impl CoverInstance {
    pub fn validate(&self) -> Result<(), SolveError> {
        check_unique_ids(self.items.iter().map(|i| i.id))?;
        for item in &self.items {
            if item.amount == 0 {
                return Err(SolveError::ZeroAmount { id: item.id });
            }
        }
        Ok(())
    }

    fn sorted_items(&self) -> Vec<CoverItem> {
        let mut items = self.items.clone();
        items.sort_by_key(|item| item.id);
        items
    }
}

fn check_cells(rows: u128, columns: u128) -> Result<(), SolveError> {
    let cells = rows.checked_mul(columns).unwrap_or(u128::MAX);
    if cells > DEFAULT_CELL_CAP {
        return Err(SolveError::CapExceeded {
            cells,
            cap: DEFAULT_CELL_CAP,
        });
    }
    Ok(())
}

/// `true` when mask `a`'s ascending id set is lexicographically smaller
/// than mask `b`'s, with items sorted so bit `k` is the `k`-th smallest id.
/// Element-wise comparison with shorter-prefix-first.
fn lex_mask_less(a: u32, b: u32) -> bool {
    if a == b {
        return false;
    }
    let first_diff = (a ^ b).trailing_zeros();
    let higher = |mask: u32| mask.checked_shr(first_diff + 1).unwrap_or(0) != 0;
    if a & (1 << first_diff) != 0 {
        // `a` owns the smaller differing element; `a` wins unless `b` is a
        // strict prefix (has nothing beyond the common part).
        higher(b)
    } else {
        !higher(a)
    }
}

/// Lexicographic order on ascending id vectors (element-wise, prefix-first).
fn lex_ids_less(a: &[u32], b: &[u32]) -> bool {
    a < b
}

fn mask_satisfies_precedence(mask: u32, pairs: &[(usize, usize)]) -> bool {
    pairs
        .iter()
        .all(|(pred, dep)| mask & (1 << dep) == 0 || mask & (1 << pred) != 0)
}

/// Compares profit/weight ratios exactly: is `a` strictly steeper than `b`?
fn ratio_greater(a: &Item, b: &Item) -> std::cmp::Ordering {
    let left = i128::from(a.profit) * i128::from(b.weight);
    let right = i128::from(b.profit) * i128::from(a.weight);
    left.cmp(&right)
}

// ---------------------------------------------------------------------------
// 0/1 knapsack
// ---------------------------------------------------------------------------

/// Ratio greedy: items scanned in decreasing profit/weight order (exact
/// cross-multiplied comparison, ties by lower id); each is taken iff it
/// fits the remaining budget and its precedence predecessors are already
/// in. Always feasible; never reports infeasible.
pub fn knapsack_greedy(instance: &KnapsackInstance) -> Result<Selection, SolveError> {
    instance.validate()?;
    let mut items = instance.items.clone();
    items.sort_by(|a, b| ratio_greater(b, a).then(a.id.cmp(&b.id)));
    let mut chosen = Vec::new();
    let mut remaining = instance.budget;
    let mut taken: BTreeSet<u32> = BTreeSet::new();
    for item in &items {
        if item.weight > remaining {
            continue;
        }
        let predecessors_met = instance
            .precedence
            .iter()
            .filter(|(_, dependent)| *dependent == item.id)
            .all(|(predecessor, _)| taken.contains(predecessor));
        if !predecessors_met {
            continue;
        }
        remaining -= item.weight;
        taken.insert(item.id);
        chosen.push(item.id);
    }
    chosen.sort_unstable();
    let total_value = sum_profit(&instance.items, &chosen);
    let total_load = sum_weight(&instance.items, &chosen);
    debug_assert!(total_load <= instance.budget);
    Ok(Selection {
        chosen,
        total_value,
        total_load,
        status: SelectionStatus::Greedy,
    })
}

fn sum_profit(items: &[Item], chosen: &[u32]) -> i64 {
    items
        .iter()
        .filter(|item| chosen.contains(&item.id))
        .map(|item| item.profit)
        .sum()
}

fn sum_weight(items: &[Item], chosen: &[u32]) -> u64 {
    items
        .iter()
        .filter(|item| chosen.contains(&item.id))
        .map(|item| item.weight)
        .sum()
}

/// Exact dynamic program over the budget; optimal profit with the
/// lexicographically smallest chosen-id set among optima. Precedence
/// constraints divert to the filtered exhaustive route, since the table
/// cannot encode them.
pub fn knapsack_exact(instance: &KnapsackInstance) -> Result<Selection, SolveError> {
    instance.validate()?;
    if !instance.precedence.is_empty() {
        let mut selection = knapsack_bruteforce(instance)?;
        selection.status = SelectionStatus::Optimal;
        return Ok(selection);
    }
    let items = instance.sorted_items();
    let n = items.len();
    let budget = instance.budget as usize;
    check_cells((n + 1) as u128, (budget + 1) as u128)?;
    let width = budget + 1;
    // suffix[i][w]: best profit from items i.. with total weight ≤ w.
    let mut suffix = vec![0i64; (n + 1) * width];
    for i in (0..n).rev() {
        let item = &items[i];
        for w in 0..width {
            let skip = suffix[(i + 1) * width + w];
            let take = if (item.weight as usize) <= w {
                suffix[(i + 1) * width + (w - item.weight as usize)] + item.profit
            } else {
                i64::MIN
            };
            suffix[i * width + w] = skip.max(take);
        }
    }
    let optimum = suffix[budget];
    // Walk forward preferring inclusion: taking the smallest feasible id
    // whenever it still reaches the optimum yields the lex-min set; once
    // nothing more is needed, stopping beats appending larger ids.
    let mut chosen = Vec::new();
    let mut w = budget;
    let mut needed = optimum;
    for (i, item) in items.iter().enumerate() {
        if needed == 0 {
            break;
        }
        let weight = item.weight as usize;
        if weight <= w && item.profit + suffix[(i + 1) * width + (w - weight)] == needed {
            chosen.push(item.id);
            w -= weight;
            needed -= item.profit;
        }
    }
    debug_assert_eq!(needed, 0);
    let total_load = sum_weight(&items, &chosen);
    Ok(Selection {
        chosen,
        total_value: optimum,
        total_load,
        status: SelectionStatus::Optimal,
    })
}

/// Exhaustive oracle over all subsets (≤ 24 items); same objective and
/// tie-break as [`knapsack_exact`].
pub fn knapsack_bruteforce(instance: &KnapsackInstance) -> Result<Selection, SolveError> {
    instance.validate()?;
    let items = instance.sorted_items();
    let n = items.len();
    if n > BRUTEFORCE_MAX_ITEMS {
        return Err(SolveError::TooManyItems {
            n,
            max: BRUTEFORCE_MAX_ITEMS,
        });
    }
    let index_of = |id: u32| {
        items
            .iter()
            .position(|item| item.id == id)
            .expect("validated")
    };
    let pairs: Vec<(usize, usize)> = instance
        .precedence
        .iter()
        .map(|(p, d)| (index_of(*p), index_of(*d)))
        .collect();
    let masks = 1u32 << n;
    // Subset-sum tables (profit/weight per mask) make the scan cheap; they
    // stay small because the item cap bounds them.
    let mut profit_of = vec![0i64; masks as usize];
    let mut weight_of = vec![0u64; masks as usize];
    for mask in 1..masks {
        let low = mask.trailing_zeros() as usize;
        let rest = (mask & (mask - 1)) as usize;
        profit_of[mask as usize] = profit_of[rest] + items[low].profit;
        weight_of[mask as usize] = weight_of[rest] + items[low].weight;
    }
    let mut best_mask = 0u32;
    let mut best_profit = i64::MIN;
    for mask in 0..masks {
        if weight_of[mask as usize] > instance.budget {
            continue;
        }
        if !pairs.is_empty() && !mask_satisfies_precedence(mask, &pairs) {
            continue;
        }
        let profit = profit_of[mask as usize];
        if profit > best_profit || (profit == best_profit && lex_mask_less(mask, best_mask)) {
            best_profit = profit;
            best_mask = mask;
        }
    }
    let chosen: Vec<u32> = (0..n)
        .filter(|bit| best_mask & (1 << bit) != 0)
        .map(|bit| items[bit].id)
        .collect();
    Ok(Selection {
        total_value: best_profit,
        total_load: weight_of[best_mask as usize],
        chosen,
        status: SelectionStatus::Optimal,
    })
}

/// Route dispatcher for the 0/1 knapsack.
pub fn knapsack_solve(
    instance: &KnapsackInstance,
    mode: SolveMode,
) -> Result<Selection, SolveError> {
    match mode {
        SolveMode::Greedy => knapsack_greedy(instance),
        SolveMode::Exact => knapsack_exact(instance),
        SolveMode::Bruteforce => knapsack_bruteforce(instance),
    }
}

// ---------------------------------------------------------------------------
// Multiple-choice knapsack
// ---------------------------------------------------------------------------

/// Best achievable profit over the `active` groups within `capacity`, or
/// `None` when no assignment fits. Exactly one item per active group, or
/// at most one when `skippable`.
fn mckp_best(
    groups: &[Vec<Item>],
    active: &[usize],
    capacity: u64,
    skippable: bool,
) -> Option<i64> {
    let width = capacity as usize + 1;
    let mut dp: Vec<Option<i64>> = vec![Some(0); width];
    for &group_index in active {
        let mut next: Vec<Option<i64>> = vec![None; width];
        for w in 0..width {
            let mut best = if skippable { dp[w] } else { None };
            for item in &groups[group_index] {
                let weight = item.weight as usize;
                if weight <= w {
                    if let Some(base) = dp[w - weight] {
                        let value = base + item.profit;
                        if best.is_none_or(|current| value > current) {
                            best = Some(value);
                        }
                    }
                }
            }
            next[w] = best;
        }
        dp = next;
    }
    dp[capacity as usize]
}

fn mckp_exact(instance: &MckpInstance) -> Result<Selection, SolveError> {
    let groups = &instance.groups;
    check_cells((groups.len() + 1) as u128, (instance.budget + 1) as u128)?;
    let all: Vec<usize> = (0..groups.len()).collect();
    let Some(optimum) = mckp_best(groups, &all, instance.budget, instance.skippable) else {
        return Ok(Selection::infeasible());
    };
    // Forced-item probe: each round fixes the smallest item id that still
    // completes to the optimum. Since every optimal set's ids are bounded
    // below by earlier fixes, the rounds emit ascending ids and the result
    // is the lex-min optimal set; with skippable groups, stopping as soon
    // as the fixed profit reaches the optimum wins by the prefix rule.
    let mut remaining: Vec<usize> = all.clone();
    let mut capacity = instance.budget;
    let mut fixed_profit = 0i64;
    let mut chosen: Vec<u32> = Vec::new();
    let mut total_load = 0u64;
    while !remaining.is_empty() {
        if instance.skippable && fixed_profit == optimum {
            break;
        }
        let mut candidates: Vec<(u32, usize, Item)> = remaining
            .iter()
            .flat_map(|&g| groups[g].iter().map(move |item| (item.id, g, *item)))
            .collect();
        candidates.sort_by_key(|(id, ..)| *id);
        let mut fixed = false;
        for (_, group_index, item) in candidates {
            if item.weight > capacity {
                continue;
            }
            let rest: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|g| *g != group_index)
                .collect();
            let best_rest = mckp_best(groups, &rest, capacity - item.weight, instance.skippable);
            if let Some(value) = best_rest {
                if fixed_profit + item.profit + value == optimum {
                    chosen.push(item.id);
                    capacity -= item.weight;
                    total_load += item.weight;
                    fixed_profit += item.profit;
                    remaining.retain(|g| *g != group_index);
                    fixed = true;
                    break;
                }
            }
        }
        debug_assert!(
            fixed || (instance.skippable && fixed_profit == optimum),
            "a feasible optimum always admits a next fix"
        );
        if !fixed {
            break;
        }
    }
    chosen.sort_unstable();
    Ok(Selection {
        chosen,
        total_value: optimum,
        total_load,
        status: SelectionStatus::Optimal,
    })
}

fn mckp_bruteforce(instance: &MckpInstance) -> Result<Selection, SolveError> {
    let groups = &instance.groups;
    let combos = groups.iter().fold(1u128, |acc, group| {
        acc.saturating_mul((group.len() + usize::from(instance.skippable)) as u128)
    });
    if combos > MCKP_BRUTEFORCE_MAX_COMBINATIONS {
        return Err(SolveError::TooManyCombinations {
            combos,
            cap: MCKP_BRUTEFORCE_MAX_COMBINATIONS,
        });
    }
    // Mixed-radix counter over per-group choices; index == group length
    // means "skip" in skippable mode.
    let radix: Vec<usize> = groups
        .iter()
        .map(|g| g.len() + usize::from(instance.skippable))
        .collect();
    let mut digits = vec![0usize; groups.len()];
    let mut best: Option<(i64, Vec<u32>, u64)> = None;
    loop {
        let mut profit = 0i64;
        let mut weight = 0u64;
        let mut ids = Vec::with_capacity(groups.len());
        for (group, &digit) in groups.iter().zip(&digits) {
            if digit < group.len() {
                let item = &group[digit];
                profit += item.profit;
                weight += item.weight;
                ids.push(item.id);
            }
        }
        if weight <= instance.budget {
            ids.sort_unstable();
            let better = match &best {
                None => true,
                Some((best_profit, best_ids, _)) => {
                    profit > *best_profit
                        || (profit == *best_profit && lex_ids_less(&ids, best_ids))
                }
            };
            if better {
                best = Some((profit, ids, weight));
            }
        }
        // Advance the counter.
        let mut position = 0;
        loop {
            if position == digits.len() {
                let selection = match best {
                    None => Selection::infeasible(),
                    Some((profit, ids, weight)) => Selection {
                        chosen: ids,
                        total_value: profit,
                        total_load: weight,
                        status: SelectionStatus::Optimal,
                    },
                };
                return Ok(selection);
            }
            digits[position] += 1;
            if digits[position] < radix[position] {
                break;
            }
            digits[position] = 0;
            position += 1;
        }
    }
}

/// Greedy heuristic: all items scanned together in decreasing
/// profit/weight order (ties by lower id); an item is taken iff its group
/// is still unserved and it fits. Groups left unserved afterwards take
/// their minimum-weight item (ties by lower id) in group order when it
/// fits — otherwise the instance is reported infeasible (skippable groups
/// simply stay empty).
fn mckp_greedy(instance: &MckpInstance) -> Result<Selection, SolveError> {
    let mut flat: Vec<(usize, Item)> = instance
        .groups
        .iter()
        .enumerate()
        .flat_map(|(g, group)| group.iter().map(move |item| (g, *item)))
        .collect();
    flat.sort_by(|(_, a), (_, b)| ratio_greater(b, a).then(a.id.cmp(&b.id)));
    let mut served = vec![false; instance.groups.len()];
    let mut remaining = instance.budget;
    let mut picks: Vec<(usize, Item)> = Vec::new();
    for (group, item) in &flat {
        if served[*group] || item.weight > remaining {
            continue;
        }
        remaining -= item.weight;
        served[*group] = true;
        picks.push((*group, *item));
    }
    for (group_index, group) in instance.groups.iter().enumerate() {
        if served[group_index] {
            continue;
        }
        let lightest = group
            .iter()
            .min_by_key(|item| (item.weight, item.id))
            .expect("groups are non-empty");
        if lightest.weight <= remaining {
            remaining -= lightest.weight;
            served[group_index] = true;
            picks.push((group_index, *lightest));
        } else if !instance.skippable {
            return Ok(Selection::infeasible());
        }
    }
    let mut chosen: Vec<u32> = picks.iter().map(|(_, item)| item.id).collect();
    let total_value: i64 = picks.iter().map(|(_, item)| item.profit).sum();
    let total_load: u64 = picks.iter().map(|(_, item)| item.weight).sum();
    chosen.sort_unstable();
    Ok(Selection {
        chosen,
        total_value,
        total_load,
        status: SelectionStatus::Greedy,
    })
}

/// Multiple-choice knapsack dispatcher.
pub fn mckp_solve(instance: &MckpInstance, mode: SolveMode) -> Result<Selection, SolveError> {
    instance.validate()?;
    match mode {
        SolveMode::Greedy => mckp_greedy(instance),
        SolveMode::Exact => mckp_exact(instance),
        SolveMode::Bruteforce => mckp_bruteforce(instance),
    }
}

// ---------------------------------------------------------------------------
// Minimum-cost cover
// ---------------------------------------------------------------------------

fn sum_cost(items: &[CoverItem], chosen: &[u32]) -> i64 {
    items
        .iter()
        .filter(|item| chosen.contains(&item.id))
        .map(|item| item.cost)
        .sum()
}

fn sum_amount(items: &[CoverItem], chosen: &[u32]) -> u64 {
    items
        .iter()
        .filter(|item| chosen.contains(&item.id))
        .map(|item| item.amount)
        .sum()
}

fn mincover_exact(instance: &CoverInstance) -> Result<Selection, SolveError> {
    let items = instance.sorted_items();
    let n = items.len();
    let threshold = instance.threshold as usize;
    check_cells((n + 1) as u128, (threshold + 1) as u128)?;
    let width = threshold + 1;
    // suffix[i][r]: min cost from items i.. to cover a remaining amount r.
    let mut suffix: Vec<Option<i64>> = vec![None; (n + 1) * width];
    suffix[n * width] = Some(0);
    for i in (0..n).rev() {
        let item = &items[i];
        for r in 0..width {
            let skip = suffix[(i + 1) * width + r];
            let covered = r.saturating_sub(item.amount as usize);
            let take = suffix[(i + 1) * width + covered].map(|cost| cost + item.cost);
            suffix[i * width + r] = match (skip, take) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (Some(a), None) => Some(a),
                (None, b) => b,
            };
        }
    }
    let Some(optimum) = suffix[threshold] else {
        return Ok(Selection::infeasible());
    };
    // Forward walk preferring inclusion, mirroring the knapsack
    // reconstruction; stop once the cost is met and the threshold covered.
    let mut chosen = Vec::new();
    let mut r = threshold;
    let mut needed = optimum;
    for (i, item) in items.iter().enumerate() {
        if needed == 0 && r == 0 {
            break;
        }
        let covered = r.saturating_sub(item.amount as usize);
        if let Some(rest) = suffix[(i + 1) * width + covered] {
            if item.cost + rest == needed {
                chosen.push(item.id);
                r = covered;
                needed -= item.cost;
            }
        }
    }
    debug_assert!(needed == 0 && r == 0);
    Ok(Selection {
        total_value: optimum,
        total_load: sum_amount(&items, &chosen),
        chosen,
        status: SelectionStatus::Optimal,
    })
}

fn mincover_bruteforce(instance: &CoverInstance) -> Result<Selection, SolveError> {
    let items = instance.sorted_items();
    let n = items.len();
    if n > BRUTEFORCE_MAX_ITEMS {
        return Err(SolveError::TooManyItems {
            n,
            max: BRUTEFORCE_MAX_ITEMS,
        });
    }
    let masks = 1u32 << n;
    let mut best: Option<(i64, u32, u64)> = None;
    for mask in 0..masks {
        let mut cost = 0i64;
        let mut amount = 0u64;
        for bit in 0..n {
            if mask & (1 << bit) != 0 {
                cost += items[bit].cost;
                amount += items[bit].amount;
            }
        }
        if amount < instance.threshold {
            continue;
        }
        let better = match &best {
            None => true,
            Some((best_cost, best_mask, _)) => {
                cost < *best_cost || (cost == *best_cost && lex_mask_less(mask, *best_mask))
            }
        };
        if better {
            best = Some((cost, mask, amount));
        }
    }
    let Some((cost, mask, amount)) = best else {
        return Ok(Selection::infeasible());
    };
    let chosen: Vec<u32> = (0..n)
        .filter(|bit| mask & (1 << bit) != 0)
        .map(|bit| items[bit].id)
        .collect();
    Ok(Selection {
        chosen,
        total_value: cost,
        total_load: amount,
        status: SelectionStatus::Optimal,
    })
}

/// Greedy: items scanned in ascending cost/amount order (exact comparison,
/// ties by lower id), taken until the threshold is covered; infeasible if
/// everything together still falls short.
fn mincover_greedy(instance: &CoverInstance) -> Result<Selection, SolveError> {
    let mut items = instance.items.clone();
    items.sort_by(|a, b| {
        let left = i128::from(a.cost) * i128::from(b.amount);
        let right = i128::from(b.cost) * i128::from(a.amount);
        left.cmp(&right).then(a.id.cmp(&b.id))
    });
    let mut chosen = Vec::new();
    let mut covered = 0u64;
    for item in &items {
        if covered >= instance.threshold {
            break;
        }
        chosen.push(item.id);
        covered += item.amount;
    }
    if covered < instance.threshold {
        return Ok(Selection::infeasible());
    }
    chosen.sort_unstable();
    Ok(Selection {
        total_value: sum_cost(&instance.items, &chosen),
        total_load: covered,
        chosen,
        status: SelectionStatus::Greedy,
    })
}

/// Minimum-cost cover dispatcher.
pub fn mincover_solve(instance: &CoverInstance, mode: SolveMode) -> Result<Selection, SolveError> {
    instance.validate()?;
    match mode {
        SolveMode::Greedy => mincover_greedy(instance),
        SolveMode::Exact => mincover_exact(instance),
        SolveMode::Bruteforce => mincover_bruteforce(instance),
    }
}

// ---------------------------------------------------------------------------
// Instance documents
// ---------------------------------------------------------------------------

fn document_error(e: serde_json::Error) -> SolveError {
    SolveError::Document {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses and validates a knapsack instance document
/// (`{"items": [{"id","profit","weight"}...], "budget": n}` with optional
/// `"precedence": [[pred, dep], ...]`).
pub fn load_knapsack(document: &str) -> Result<KnapsackInstance, SolveError> {
    let instance: KnapsackInstance = serde_json::from_str(document).map_err(document_error)?;
    instance.validate()?;
    Ok(instance)
}

/// Parses and validates a multiple-choice instance document
/// (`{"groups": [[items...], ...], "budget": n}` with optional
/// `"skippable": true`).
pub fn load_mckp(document: &str) -> Result<MckpInstance, SolveError> {
    let instance: MckpInstance = serde_json::from_str(document).map_err(document_error)?;
    instance.validate()?;
    Ok(instance)
}

/// Parses and validates a coverage instance document
/// (`{"items": [{"id","cost","amount"}...], "threshold": n}`).
pub fn load_cover(document: &str) -> Result<CoverInstance, SolveError> {
    let instance: CoverInstance = serde_json::from_str(document).map_err(document_error)?;
    instance.validate()?;
    Ok(instance)
}

// ---------------------------------------------------------------------------
// Seeded instance generation
// ---------------------------------------------------------------------------

/// Deterministic split-mix 64-bit generator behind the seeded demo and
/// property instances; produces identical sequences on every platform.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Next raw 64-bit value.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` for `bound ≥ 1`. The modulo bias is
    /// irrelevant at the small bounds used here.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Seeded knapsack instance: `1..=max_items` items with profits 0–9 and
/// weights 1–9, budget drawn up to the total weight.
pub fn seeded_knapsack(seed: u64, max_items: usize) -> KnapsackInstance {
    let mut rng = SplitMix64::new(seed);
    let n = 1 + rng.below(max_items as u64) as usize;
    let items: Vec<Item> = (1..=n as u32)
        .map(|id| Item {
            id,
            profit: rng.below(10) as i64,
            weight: 1 + rng.below(9),
        })
        .collect();
    let total: u64 = items.iter().map(|item| item.weight).sum();
    let budget = rng.below(total + 1);
    KnapsackInstance {
        items,
        budget,
        precedence: Vec::new(),
    }
}

/// Seeded multiple-choice instance: `1..=max_groups` groups of 1–3 items
/// each, occasionally skippable, budget drawn up to the total weight.
pub fn seeded_mckp(seed: u64, max_groups: usize) -> MckpInstance {
    let mut rng = SplitMix64::new(seed);
    let group_count = 1 + rng.below(max_groups as u64) as usize;
    let mut next_id = 1u32;
    let mut groups = Vec::with_capacity(group_count);
    for _ in 0..group_count {
        let size = 1 + rng.below(3) as usize;
        let group: Vec<Item> = (0..size)
            .map(|_| {
                let item = Item {
                    id: next_id,
                    profit: rng.below(10) as i64,
                    weight: 1 + rng.below(9),
                };
                next_id += 1;
                item
            })
            .collect();
        groups.push(group);
    }
    let total: u64 = groups.iter().flatten().map(|item| item.weight).sum();
    let budget = rng.below(total + 1);
    let skippable = rng.below(2) == 1;
    MckpInstance {
        groups,
        budget,
        skippable,
    }
}

/// Seeded coverage instance: `1..=max_items` items with costs 0–9 and
/// amounts 1–9; the threshold is drawn up to one past the total amount,
/// so a small share of instances is infeasible on purpose.
pub fn seeded_cover(seed: u64, max_items: usize) -> CoverInstance {
    let mut rng = SplitMix64::new(seed);
    let n = 1 + rng.below(max_items as u64) as usize;
    let items: Vec<CoverItem> = (1..=n as u32)
        .map(|id| CoverItem {
            id,
            cost: rng.below(10) as i64,
            amount: 1 + rng.below(9),
        })
        .collect();
    let total: u64 = items.iter().map(|item| item.amount).sum();
    let threshold = rng.below(total + 2);
    CoverInstance { items, threshold }
}
