//! Admissible word transformations, tent words, echelon forms, and the
//! constructive reduction of any word to echelon form.
//!
//! The admissible moves are: cancelling a doubled letter, commuting letters
//! with exponent 2, cyclic rotation, the braid replacement
//! `g_i g_j g_i ↦ g_j g_i g_j` where `m_ij = 3` with `i < j`, and the tent
//! commuting moves that push a letter leftwards across a tent word. A move
//! never increases the content of a word, and all moves preserve the
//! conjugacy class of the represented element.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realize::{conjugator_search, enumerate_group, eval_word};
use crate::system::{content, CoxeterSystem, Family, Word};

/// One admissible transformation, parameterized by the left offset where it
/// applies (`cut` for cyclic rotations).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AdmissibleStep {
    /// Remove `g_i g_i` at `pos`.
    Cancel { pos: usize },
    /// Swap commuting letters at `pos`, `pos + 1`.
    Commute { pos: usize },
    /// Rotate: `w[cut..] ++ w[..cut]`.
    Circular { cut: usize },
    /// `g_i g_j g_i ↦ g_j g_i g_j` at `pos`, valid when `m_ij = 3` and `i < j`.
    ReplaceBraid { pos: usize },
    /// A tent word starting at `pos` swaps with the letter that follows it.
    TentCommute { pos: usize },
}

/// The tent word `t_k`: `g_k … g_{n−1} g_n g_{n−1} … g_k` in `B_n` and
/// `g_k … g_{n−1} g_n g_{n+1} g_{n−1} … g_k` in `D_{n+1}`, for `1 ≤ k ≤ n−1`.
pub fn tent_word(k: usize, sys: &CoxeterSystem) -> Result<Word> {
    let n = sys.rank();
    match sys.family() {
        Family::B | Family::D => {}
        _ => {
            return Err(Error::UnsupportedSystem(format!(
                "tent words exist only in types B and D, not {}",
                sys.name()
            )))
        }
    }
    if k == 0 || k > n.saturating_sub(1) {
        return Err(Error::Validation(format!("tent index {k} out of range 1..={}", n - 1)));
    }
    let mut letters: Vec<usize> = (k..=n).collect();
    if sys.family() == Family::D {
        letters.push(n + 1);
    }
    letters.extend((k..n).rev());
    Ok(Word(letters))
}

fn tent_len(sys: &CoxeterSystem, k: usize) -> usize {
    let n = sys.rank();
    match sys.family() {
        Family::B => 2 * (n - k) + 1,
        Family::D => 2 * (n - k) + 2,
        _ => 0,
    }
}

/// Apply one admissible step, validating the pattern it targets.
pub fn apply_step(w: &Word, step: &AdmissibleStep, sys: &CoxeterSystem) -> Result<Word> {
    w.validate(sys)?;
    let letters = w.letters();
    let n = sys.rank();
    let mismatch = |pos: usize, reason: &str| Error::StepMismatch { pos, reason: reason.into() };
    match *step {
        AdmissibleStep::Cancel { pos } => {
            if pos + 1 >= letters.len() {
                return Err(mismatch(pos, "cancel needs two letters"));
            }
            if letters[pos] != letters[pos + 1] {
                return Err(mismatch(pos, "letters differ"));
            }
            let mut out = letters.to_vec();
            out.drain(pos..pos + 2);
            Ok(Word(out))
        }
        AdmissibleStep::Commute { pos } => {
            if pos + 1 >= letters.len() {
                return Err(mismatch(pos, "commute needs two letters"));
            }
            let (a, b) = (letters[pos], letters[pos + 1]);
            if sys.exponent(a, b)? != 2 {
                return Err(mismatch(pos, "letters do not commute"));
            }
            let mut out = letters.to_vec();
            out.swap(pos, pos + 1);
            Ok(Word(out))
        }
        AdmissibleStep::Circular { cut } => {
            if cut > letters.len() {
                return Err(mismatch(cut, "cut beyond end of word"));
            }
            let mut out = letters[cut..].to_vec();
            out.extend_from_slice(&letters[..cut]);
            Ok(Word(out))
        }
        AdmissibleStep::ReplaceBraid { pos } => {
            if pos + 2 >= letters.len() {
                return Err(mismatch(pos, "braid needs three letters"));
            }
            let (a, b, a2) = (letters[pos], letters[pos + 1], letters[pos + 2]);
            if a != a2 {
                return Err(mismatch(pos, "pattern is not g_i g_j g_i"));
            }
            if a >= b || sys.exponent(a, b)? != 3 {
                return Err(mismatch(pos, "braid requires i < j with m_ij = 3"));
            }
            let mut out = letters.to_vec();
            out[pos] = b;
            out[pos + 1] = a;
            out[pos + 2] = b;
            Ok(Word(out))
        }
        AdmissibleStep::TentCommute { pos } => {
            if matches!(sys.family(), Family::A | Family::I) {
                return Err(mismatch(pos, "no tent words in this family"));
            }
            if pos >= letters.len() {
                return Err(mismatch(pos, "position beyond end of word"));
            }
            let k = letters[pos];
            if k >= n {
                return Err(mismatch(pos, "tent words start with an index below n"));
            }
            let tent = tent_word(k, sys)?;
            let tl = tent.len();
            if pos + tl >= letters.len() {
                return Err(mismatch(pos, "no letter after the tent"));
            }
            if letters[pos..pos + tl] != *tent.letters() {
                return Err(mismatch(pos, "subword is not a tent word"));
            }
            let j = letters[pos + tl];
            let out_letter = match sys.family() {
                Family::B if j == n => n,
                Family::D if j == n => n + 1,
                Family::D if j == n + 1 => n,
                _ if j > k && j < n => j,
                _ => return Err(mismatch(pos, "letter cannot cross the tent")),
            };
            let mut out = letters[..pos].to_vec();
            out.push(out_letter);
            out.extend_from_slice(tent.letters());
            out.extend_from_slice(&letters[pos + tl + 1..]);
            Ok(Word(out))
        }
    }
}

/// Check the tent commuting identities as equalities of realized elements.
pub fn verify_tent_identities(sys: &CoxeterSystem) -> Result<bool> {
    let n = sys.rank();
    match sys.family() {
        Family::B | Family::D => {}
        _ => return Err(Error::UnsupportedSystem("tent identities need type B or D".into())),
    }
    let eval_cat = |a: &[usize], b: &[usize]| -> Result<_> {
        let mut letters = a.to_vec();
        letters.extend_from_slice(b);
        eval_word(&Word(letters), sys)
    };
    for k in 1..n {
        let tk = tent_word(k, sys)?;
        for j in k + 1..n {
            if eval_cat(tk.letters(), &[j])? != eval_cat(&[j], tk.letters())? {
                return Ok(false);
            }
        }
        match sys.family() {
            Family::B => {
                if eval_cat(tk.letters(), &[n])? != eval_cat(&[n], tk.letters())? {
                    return Ok(false);
                }
            }
            Family::D => {
                if eval_cat(tk.letters(), &[n])? != eval_cat(&[n + 1], tk.letters())? {
                    return Ok(false);
                }
                if eval_cat(tk.letters(), &[n + 1])? != eval_cat(&[n], tk.letters())? {
                    return Ok(false);
                }
            }
            _ => unreachable!(),
        }
        for j in 1..n {
            let tj = tent_word(j, sys)?;
            if eval_cat(tk.letters(), tj.letters())? != eval_cat(tj.letters(), tk.letters())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// What occupies one echelon slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Delta {
    One,
    Gen,
    Tent,
}

/// An echelon word `δ_1 δ_2 … δ_{n+1}` with each `δ_i` drawn from the slot
/// alphabet of the ambient family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonForm {
    sys: CoxeterSystem,
    deltas: Vec<Delta>,
}

impl EchelonForm {
    pub fn deltas(&self) -> &[Delta] {
        &self.deltas
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    /// Slot labels such as `["t1", "g2", "1"]`.
    pub fn labels(&self) -> Vec<String> {
        self.deltas
            .iter()
            .enumerate()
            .map(|(idx, d)| match d {
                Delta::One => "1".to_string(),
                Delta::Gen => format!("g{}", idx + 1),
                Delta::Tent => format!("t{}", idx + 1),
            })
            .collect()
    }

    pub fn flatten(&self) -> Word {
        let mut letters = Vec::new();
        for (idx, d) in self.deltas.iter().enumerate() {
            match d {
                Delta::One => {}
                Delta::Gen => letters.push(idx + 1),
                Delta::Tent => {
                    letters.extend_from_slice(tent_word(idx + 1, &self.sys).expect("valid tent").letters())
                }
            }
        }
        Word(letters)
    }
}

fn slot_allows(sys: &CoxeterSystem, slot: usize, d: Delta) -> bool {
    let n = sys.rank();
    match d {
        Delta::One => true,
        Delta::Gen => match sys.family() {
            Family::A => slot <= n,
            Family::B => slot <= n,
            Family::D => slot <= n + 1,
            Family::I => false,
        },
        Delta::Tent => {
            matches!(sys.family(), Family::B | Family::D) && slot <= n.saturating_sub(1)
        }
    }
}

/// Greedy left-to-right parse of a word as an echelon form; tents are tried
/// before single generators, which makes the parse unique when it exists.
pub fn is_echelon(w: &Word, sys: &CoxeterSystem) -> Result<Option<EchelonForm>> {
    if matches!(sys.family(), Family::A | Family::B | Family::D) {
        w.validate(sys)?;
    } else {
        return Err(Error::UnsupportedSystem("echelon forms exist in types A, B, D".into()));
    }
    let n = sys.rank();
    let slots = n + 1;
    let letters = w.letters();
    let mut deltas = vec![Delta::One; slots];
    let mut pos = 0usize;
    for slot in 1..=slots {
        if pos == letters.len() {
            break;
        }
        if slot_allows(sys, slot, Delta::Tent) {
            let tent = tent_word(slot, sys)?;
            let tl = tent.len();
            if pos + tl <= letters.len() && letters[pos..pos + tl] == *tent.letters() {
                deltas[slot - 1] = Delta::Tent;
                pos += tl;
                continue;
            }
        }
        if slot_allows(sys, slot, Delta::Gen) && letters[pos] == slot {
            deltas[slot - 1] = Delta::Gen;
            pos += 1;
        }
    }
    if pos == letters.len() {
        Ok(Some(EchelonForm { sys: sys.clone(), deltas }))
    } else {
        Ok(None)
    }
}

/// An audit witness for one rewriting run: replaying `steps` from `start`
/// reproduces `end`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RewriteTrace {
    pub start: Word,
    pub steps: Vec<AdmissibleStep>,
    pub end: Word,
}

impl RewriteTrace {
    /// Re-run every step, erroring if any step fails to apply or the final
    /// word disagrees.
    pub fn replay(&self, sys: &CoxeterSystem) -> Result<Word> {
        let mut w = self.start.clone();
        for step in &self.steps {
            w = apply_step(&w, step, sys)?;
        }
        if w != self.end {
            return Err(Error::InvariantViolation("trace replay mismatch".into()));
        }
        Ok(w)
    }

    /// Extract an explicit conjugator word `c` with
    /// `end = c · start · c⁻¹` as group elements.
    ///
    /// Non-circular steps preserve the element; a rotation at `cut` replaces
    /// `u v` by `v u = u⁻¹ (u v) u`, so the cut prefixes compose into the
    /// witness. Because the generators are involutions, `u⁻¹` is just the
    /// reversed word. The identity is verified in the realization before
    /// returning.
    pub fn conjugator_word(&self, sys: &CoxeterSystem) -> Result<Word> {
        let mut w = self.start.clone();
        let mut conj: Vec<usize> = Vec::new();
        for step in &self.steps {
            if let AdmissibleStep::Circular { cut } = step {
                // c ← u⁻¹ · c with u the rotated-away prefix.
                let mut prefix: Vec<usize> = w.letters()[..*cut].to_vec();
                prefix.reverse();
                prefix.extend_from_slice(&conj);
                conj = prefix;
            }
            w = apply_step(&w, step, sys)?;
        }
        if w != self.end {
            return Err(Error::InvariantViolation("trace replay mismatch".into()));
        }
        let witness = Word(conj);
        let c = eval_word(&witness, sys)?;
        let lhs = eval_word(&self.end, sys)?;
        let rhs = c.mul(&eval_word(&self.start, sys)?).mul(&c.inverse());
        if lhs != rhs {
            return Err(Error::InvariantViolation(
                "conjugator witness failed to verify".into(),
            ));
        }
        Ok(witness)
    }

    pub fn circular_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, AdmissibleStep::Circular { .. }))
            .count()
    }
}

/// Book-keeping wrapper: every primitive move is validated through
/// [`apply_step`] and recorded, so traces are valid by construction.
struct Rewriter<'a> {
    sys: &'a CoxeterSystem,
    word: Vec<usize>,
    steps: Vec<AdmissibleStep>,
}

impl<'a> Rewriter<'a> {
    fn new(sys: &'a CoxeterSystem, word: Vec<usize>) -> Self {
        Rewriter { sys, word, steps: Vec::new() }
    }

    fn len(&self) -> usize {
        self.word.len()
    }

    fn apply(&mut self, step: AdmissibleStep) -> Result<()> {
        let next = apply_step(&Word(self.word.clone()), &step, self.sys)?;
        self.word = next.0;
        self.steps.push(step);
        Ok(())
    }

    fn cancel(&mut self, pos: usize) -> Result<()> {
        self.apply(AdmissibleStep::Cancel { pos })
    }

    fn commute(&mut self, pos: usize) -> Result<()> {
        self.apply(AdmissibleStep::Commute { pos })
    }

    fn braid(&mut self, pos: usize) -> Result<()> {
        self.apply(AdmissibleStep::ReplaceBraid { pos })
    }

    fn tent_commute(&mut self, pos: usize) -> Result<()> {
        self.apply(AdmissibleStep::TentCommute { pos })
    }

    fn circular(&mut self, cut: usize) -> Result<()> {
        if cut == 0 || cut == self.word.len() {
            return Ok(());
        }
        self.apply(AdmissibleStep::Circular { cut })
    }
}

/// Location of the merged `δ_i` block inside a reduced region.
#[derive(Debug, Clone, Copy)]
struct DeltaLoc {
    start: usize,
    len: usize,
    kind: Delta,
}

/// Normalize a region whose letters all live in the top of the alphabet
/// (`{g_n}` in A/B, `{g_n, g_{n+1}}` in D): cancel doubled letters and sort
/// `g_n` before `g_{n+1}`. Returns the new region end.
fn normalize_top(rw: &mut Rewriter, start: usize, mut end: usize) -> Result<usize> {
    loop {
        let mut changed = false;
        let mut p = start;
        while p + 1 < end {
            if rw.word[p] == rw.word[p + 1] {
                rw.cancel(p)?;
                end -= 2;
                changed = true;
            } else if rw.word[p] > rw.word[p + 1] {
                rw.commute(p)?;
                changed = true;
                p += 1;
            } else {
                p += 1;
            }
        }
        if !changed {
            return Ok(end);
        }
    }
}

/// Reduce `region = rw.word[start..end]`, whose letters all have index ≥ `i`,
/// into `w' δ_i w''` where `w'`, `w''` contain only letters with index > `i`.
/// Uses no circular moves. Returns the new region end and the δ location.
fn reduce_target(rw: &mut Rewriter, start: usize, end: usize, i: usize) -> Result<(usize, DeltaLoc)> {
    let sys = rw.sys;
    let n = sys.rank();
    debug_assert!(rw.word[start..end].iter().all(|&l| l >= i));

    // Top of the alphabet: only cancelling (and commuting in D) applies.
    let top = match sys.family() {
        Family::D => i >= n,
        _ => i >= n,
    };
    if top {
        let new_end = normalize_top(rw, start, end)?;
        // The region is now g_n^{0|1} g_{n+1}^{0|1}; δ_i is the leading part
        // if it matches `i`, otherwise empty.
        let len = usize::from(new_end > start && rw.word[start] == i);
        return Ok((new_end, DeltaLoc { start, len, kind: if len == 1 { Delta::Gen } else { Delta::One } }));
    }

    if i == n - 1 {
        return reduce_base(rw, start, end, i);
    }
    reduce_general(rw, start, end, i)
}

/// Base case: `i = n − 1`, where the sub-alphabet is A₂, B₂ or D₃ and the
/// merged block is built by a left-to-right fold.
fn reduce_base(rw: &mut Rewriter, start: usize, mut end: usize, a: usize) -> Result<(usize, DeltaLoc)> {
    let sys = rw.sys;
    let family = sys.family();
    let tent_block = tent_len(sys, a);
    // None = no block yet; Some((pos, len)) with len 1 (g_a) or tent_block.
    let mut block: Option<(usize, usize)> = None;
    loop {
        let scan_from = block.map_or(start, |(p, l)| p + l);
        let Some(q) = (scan_from..end).find(|&p| rw.word[p] == a) else {
            break;
        };
        let Some((bp, bl)) = block else {
            block = Some((q, 1));
            continue;
        };
        // Normalize the letters strictly between the block and the occurrence.
        let q = {
            let new_end = normalize_top(rw, bp + bl, q)?;
            end -= q - new_end;
            new_end
        };
        let vred: Vec<usize> = rw.word[bp + bl..q].to_vec();
        if bl == 1 {
            match (family, vred.as_slice()) {
                (_, []) => {
                    rw.cancel(bp)?;
                    end -= 2;
                    block = None;
                }
                (Family::A, [_b]) | (Family::D, [_b]) => {
                    rw.braid(bp)?;
                    block = Some((bp + 1, 1));
                }
                (Family::B, [_b]) => {
                    // g_a g_b g_a is the tent t_a; no move needed.
                    block = Some((bp, tent_block));
                }
                (Family::D, [_b, _c]) => {
                    // g_a g_n g_{n+1} g_a is the tent t_a in D.
                    block = Some((bp, tent_block));
                }
                _ => {
                    return Err(Error::InvariantViolation(
                        "unexpected letters between occurrences".into(),
                    ))
                }
            }
        } else {
            // Block is a tent: push the in-between letters across it, then
            // cancel its trailing letter with the occurrence.
            let mut bp = bp;
            for _ in 0..vred.len() {
                rw.tent_commute(bp)?;
                bp += 1;
            }
            rw.cancel(q - 1)?;
            end -= 2;
            block = Some((bp, 1));
        }
    }
    let loc = match block {
        None => DeltaLoc { start: end, len: 0, kind: Delta::One },
        Some((p, 1)) => DeltaLoc { start: p, len: 1, kind: Delta::Gen },
        Some((p, l)) => DeltaLoc { start: p, len: l, kind: Delta::Tent },
    };
    Ok((end, loc))
}

/// General case `i ≤ n − 2`: recursively merge the letters between the first
/// two occurrences of `g_i`, then cancel, braid, or form a tent.
fn reduce_general(rw: &mut Rewriter, start: usize, mut end: usize, i: usize) -> Result<(usize, DeltaLoc)> {
    let tent_block = tent_len(rw.sys, i);
    loop {
        let occ: Vec<usize> = (start..end).filter(|&p| rw.word[p] == i).collect();
        match occ.len() {
            0 => return Ok((end, DeltaLoc { start: end, len: 0, kind: Delta::One })),
            1 => return Ok((end, DeltaLoc { start: occ[0], len: 1, kind: Delta::Gen })),
            _ => {}
        }
        let (p1, p2) = (occ[0], occ[1]);
        let (v_end, d) = reduce_target(rw, p1 + 1, p2, i + 1)?;
        end -= p2 - v_end;
        // Slide the first g_i right across w' and the second left across w'';
        // everything in between has index ≥ i + 2 and commutes with g_i.
        let mut gpos = p1;
        while gpos + 1 < d.start {
            rw.commute(gpos)?;
            gpos += 1;
        }
        let mut qpos = v_end;
        while qpos > d.start + d.len {
            rw.commute(qpos - 1)?;
            qpos -= 1;
        }
        match d.kind {
            Delta::One => {
                rw.cancel(d.start - 1)?;
                end -= 2;
            }
            Delta::Gen => {
                rw.braid(d.start - 1)?;
            }
            Delta::Tent => {
                // g_i t_{i+1} g_i is exactly t_i.
                let tb_start = d.start - 1;
                let more = (tb_start + tent_block..end).any(|p| rw.word[p] == i);
                if !more {
                    return Ok((end, DeltaLoc { start: tb_start, len: tent_block, kind: Delta::Tent }));
                }
                let (new_end, d2) = reduce_target(rw, tb_start + tent_block, end, i)?;
                end = new_end;
                // Push the suffix's w' part across the tent block.
                let mut tb = tb_start;
                for _ in 0..d2.start - (tb_start + tent_block) {
                    rw.tent_commute(tb)?;
                    tb += 1;
                }
                match d2.kind {
                    Delta::One => {
                        return Ok((end, DeltaLoc { start: tb, len: tent_block, kind: Delta::Tent }));
                    }
                    Delta::Gen => {
                        // t_i g_i: cancel the tent's trailing letter.
                        rw.cancel(tb + tent_block - 1)?;
                        end -= 2;
                        return Ok((end, DeltaLoc { start: tb, len: 1, kind: Delta::Gen }));
                    }
                    Delta::Tent => {
                        // t_i t_i: cancel at the junction and keep merging.
                        rw.cancel(tb + tent_block - 1)?;
                        end -= 2;
                    }
                }
            }
        }
    }
}

/// Reduce a word to echelon form by admissible transformations, returning the
/// parsed form together with the full trace. Deterministic; follows the
/// constructive reduction slot by slot.
pub fn to_echelon(w: &Word, sys: &CoxeterSystem) -> Result<(EchelonForm, RewriteTrace)> {
    if !matches!(sys.family(), Family::A | Family::B | Family::D) {
        return Err(Error::UnsupportedSystem(
            "echelon reduction is defined for types A, B and D".into(),
        ));
    }
    w.validate(sys)?;
    let n = sys.rank();
    let mut rw = Rewriter::new(sys, w.0.clone());
    // Prefix block structure: (slot, relative start, length) of each finalized
    // non-empty δ, in slot order. The prefix always sits at the front.
    let mut prefix_blocks: Vec<(usize, usize, usize)> = Vec::new();
    let mut prefix_len = 0usize;

    loop {
        if prefix_len == rw.len() {
            break;
        }
        let j = *rw.word[prefix_len..].iter().min().expect("nonempty region");
        let word_len = rw.len();
        if j >= n {
            // Only top-alphabet letters remain: order and cancel them.
            normalize_top(&mut rw, prefix_len, word_len)?;
            break;
        }
        let (region_end, d) = reduce_target(&mut rw, prefix_len, word_len, j)?;
        debug_assert_eq!(region_end, rw.len());
        if d.len == 0 {
            continue;
        }
        // Park w' = word[prefix_len..d.start] in front of the prefix, one
        // letter at a time, crossing finalized blocks right to left; a single
        // rotation then restores the prefix to the front.
        let mut parked = 0usize;
        while parked + prefix_len < d.start {
            for &(_, rel_start, len) in prefix_blocks.iter().rev() {
                let abs_start = parked + rel_start;
                match len {
                    1 => rw.commute(abs_start)?,
                    _ => rw.tent_commute(abs_start)?,
                }
            }
            parked += 1;
        }
        rw.circular(parked)?;
        prefix_blocks.push((j, prefix_len, d.len));
        prefix_len += d.len;
    }

    let end_word = Word(rw.word.clone());
    let form = is_echelon(&end_word, sys)?.ok_or_else(|| {
        Error::InvariantViolation(format!("reduction produced a non-echelon word {end_word}"))
    })?;
    let trace = RewriteTrace { start: w.clone(), steps: rw.steps, end: end_word };
    Ok((form, trace))
}

/// How an echelon conjugacy question was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MergePath {
    EqualWords,
    ForkLengthRule,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeDecision {
    pub conjugate: bool,
    pub path: MergePath,
}

/// Decide whether two type-D echelon forms of equal content represent
/// conjugate elements. Equal words and long-enough fork segments settle it
/// directly; the remaining cases fall back to a realization-level search.
pub fn echelon_conjugacy_merge(
    e1: &EchelonForm,
    e2: &EchelonForm,
    sys: &CoxeterSystem,
) -> Result<MergeDecision> {
    if sys.family() != Family::D {
        return Err(Error::UnsupportedSystem("echelon merging is a type-D question".into()));
    }
    let w1 = e1.flatten();
    let w2 = e2.flatten();
    let c1 = content(&w1, sys)?;
    let c2 = content(&w2, sys)?;
    if c1 != c2 {
        return Err(Error::Validation(format!(
            "contents differ: {:?} vs {:?}",
            c1.0, c2.0
        )));
    }
    if w1 == w2 {
        return Ok(MergeDecision { conjugate: true, path: MergePath::EqualWords });
    }
    let fork_length = c1.0[0] - c1.0[1..].iter().sum::<usize>();
    if fork_length >= 3 {
        return Ok(MergeDecision { conjugate: true, path: MergePath::ForkLengthRule });
    }
    let table = enumerate_group(sys)?;
    let x = table.eval_word_index(&w1)?;
    let y = table.eval_word_index(&w2)?;
    Ok(MergeDecision {
        conjugate: conjugator_search(x, y, &table).is_some(),
        path: MergePath::BruteForce,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::{conjugator_search, enumerate_group};
    use crate::system::lex_leq;

    fn sys(name: &str) -> CoxeterSystem {
        name.parse().unwrap()
    }

    fn w(letters: &[usize]) -> Word {
        Word(letters.to_vec())
    }

    #[test]
    fn tent_words() {
        assert_eq!(tent_word(1, &sys("B2")).unwrap(), w(&[1, 2, 1]));
        assert_eq!(tent_word(1, &sys("D3")).unwrap(), w(&[1, 2, 3, 1]));
        assert_eq!(tent_word(2, &sys("B3")).unwrap(), w(&[2, 3, 2]));
        assert_eq!(tent_word(1, &sys("B3")).unwrap(), w(&[1, 2, 3, 2, 1]));
        assert_eq!(tent_word(1, &sys("D4")).unwrap(), w(&[1, 2, 3, 4, 2, 1]));
        assert!(tent_word(1, &sys("A3")).is_err());
        assert!(tent_word(2, &sys("B2")).is_err());
        assert!(tent_word(0, &sys("B3")).is_err());
    }

    #[test]
    fn apply_step_examples() {
        let out = apply_step(&w(&[1, 1, 2]), &AdmissibleStep::Cancel { pos: 0 }, &sys("A2")).unwrap();
        assert_eq!(out, w(&[2]));

        let out = apply_step(&w(&[1, 3]), &AdmissibleStep::Commute { pos: 0 }, &sys("A3")).unwrap();
        assert_eq!(out, w(&[3, 1]));

        let out =
            apply_step(&w(&[1, 2, 1]), &AdmissibleStep::ReplaceBraid { pos: 0 }, &sys("A2")).unwrap();
        assert_eq!(out, w(&[2, 1, 2]));

        // Not a tent word in B3 (t_1 = 1,2,3,2,1 there).
        let err = apply_step(&w(&[1, 2, 1, 3]), &AdmissibleStep::TentCommute { pos: 0 }, &sys("B3"));
        assert!(err.is_err());

        // A real tent commute in B2, with the letter pushed across.
        let out =
            apply_step(&w(&[1, 2, 1, 2]), &AdmissibleStep::TentCommute { pos: 0 }, &sys("B2")).unwrap();
        assert_eq!(out, w(&[2, 1, 2, 1]));

        // In D3 the fork letters swap as they cross.
        let out =
            apply_step(&w(&[1, 2, 3, 1, 2]), &AdmissibleStep::TentCommute { pos: 0 }, &sys("D3"))
                .unwrap();
        assert_eq!(out, w(&[3, 1, 2, 3, 1]));

        // Braids with exponent 4 are rejected.
        let err = apply_step(&w(&[1, 2, 1]), &AdmissibleStep::ReplaceBraid { pos: 0 }, &sys("B2"));
        assert!(err.is_err());
    }

    #[test]
    fn circular_rotation() {
        let out = apply_step(&w(&[1, 2, 3]), &AdmissibleStep::Circular { cut: 1 }, &sys("A3")).unwrap();
        assert_eq!(out, w(&[2, 3, 1]));
    }

    #[test]
    fn tent_identities_hold_in_small_groups() {
        for name in ["B2", "B3", "D3", "D4"] {
            assert!(verify_tent_identities(&sys(name)).unwrap(), "{name}");
        }
        assert!(verify_tent_identities(&sys("A3")).is_err());
    }

    #[test]
    fn echelon_parse_examples() {
        let form = is_echelon(&Word::empty(), &sys("A2")).unwrap().unwrap();
        assert!(form.deltas().iter().all(|d| *d == Delta::One));

        let form = is_echelon(&w(&[1, 2, 1, 2]), &sys("B2")).unwrap().unwrap();
        assert_eq!(form.deltas(), &[Delta::Tent, Delta::Gen, Delta::One]);
        assert_eq!(form.labels(), vec!["t1", "g2", "1"]);
        assert_eq!(form.flatten(), w(&[1, 2, 1, 2]));

        assert!(is_echelon(&w(&[2, 1]), &sys("A2")).unwrap().is_none());
        assert!(is_echelon(&w(&[1, 2, 3]), &sys("A3")).unwrap().is_some());
        assert!(is_echelon(&w(&[1, 1]), &sys("A2")).unwrap().is_none());
    }

    #[test]
    fn to_echelon_spec_words() {
        let (form, trace) = to_echelon(&w(&[1, 2, 1]), &sys("A2")).unwrap();
        assert_eq!(form.flatten(), w(&[1]));
        trace.replay(&sys("A2")).unwrap();

        let (form, trace) = to_echelon(&w(&[2, 1, 2, 1]), &sys("B2")).unwrap();
        assert_eq!(form.flatten(), w(&[1, 2, 1, 2]));
        assert_eq!(form.deltas(), &[Delta::Tent, Delta::Gen, Delta::One]);
        assert_eq!(trace.circular_count(), 1);
        trace.replay(&sys("B2")).unwrap();

        let (form, _) = to_echelon(&Word::empty(), &sys("D3")).unwrap();
        assert!(form.flatten().is_empty());
    }

    #[test]
    fn to_echelon_rejects_type_i() {
        assert!(to_echelon(&w(&[1, 2]), &sys("I5")).is_err());
    }

    #[test]
    fn conjugator_witness_verifies_against_brute_force() {
        for name in ["B2", "B3", "D3"] {
            let s = sys(name);
            let table = enumerate_group(&s).unwrap();
            let gc = s.generator_count();
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            let mut layer: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..5 {
                let mut next = Vec::new();
                for base in &layer {
                    for l in 1..=gc {
                        let mut w2 = base.clone();
                        w2.push(l);
                        next.push(w2);
                    }
                }
                words.extend(next.iter().cloned());
                layer = next;
            }
            for letters in words {
                let word = Word(letters);
                let (_, trace) = to_echelon(&word, &s).unwrap();
                let c = trace.conjugator_word(&s).unwrap();
                // The witness agrees with the table-level conjugation.
                let ci = table.eval_word_index(&c).unwrap();
                let x = table.eval_word_index(&trace.start).unwrap();
                let y = table.eval_word_index(&trace.end).unwrap();
                assert_eq!(
                    table.product(table.product(ci, x), table.inverse(ci)),
                    y,
                    "{name}: witness mismatch for {}",
                    trace.start
                );
            }
        }
    }

    #[test]
    fn to_echelon_is_idempotent_on_samples() {
        for name in ["A3", "B3", "D4"] {
            let s = sys(name);
            let gc = s.generator_count();
            let mut words = vec![vec![]];
            for len in 1..=4usize {
                let mut next = Vec::new();
                for base in &words {
                    if base.len() == len - 1 {
                        for l in 1..=gc {
                            let mut w2 = base.clone();
                            w2.push(l);
                            next.push(w2);
                        }
                    }
                }
                words.extend(next);
            }
            for letters in words {
                let (form, _) = to_echelon(&Word(letters.clone()), &s).unwrap();
                let (again, _) = to_echelon(&form.flatten(), &s).unwrap();
                assert_eq!(form.flatten(), again.flatten(), "{name} {letters:?}");
            }
        }
    }

    /// Every parse of `letters` into echelon slots, by exhaustive search;
    /// used to confirm that the greedy parse is the only one.
    fn all_echelon_parses(letters: &[usize], sys: &CoxeterSystem, slot: usize, acc: &mut Vec<Vec<Delta>>, cur: &mut Vec<Delta>) {
        let slots = sys.rank() + 1;
        if slot > slots {
            if letters.is_empty() {
                acc.push(cur.clone());
            }
            return;
        }
        // δ_slot = 1
        cur.push(Delta::One);
        all_echelon_parses(letters, sys, slot + 1, acc, cur);
        cur.pop();
        // δ_slot = g_slot
        if slot_allows(sys, slot, Delta::Gen) && letters.first() == Some(&slot) {
            cur.push(Delta::Gen);
            all_echelon_parses(&letters[1..], sys, slot + 1, acc, cur);
            cur.pop();
        }
        // δ_slot = t_slot
        if slot_allows(sys, slot, Delta::Tent) {
            let tent = tent_word(slot, sys).unwrap();
            if letters.len() >= tent.len() && letters[..tent.len()] == *tent.letters() {
                cur.push(Delta::Tent);
                all_echelon_parses(&letters[tent.len()..], sys, slot + 1, acc, cur);
                cur.pop();
            }
        }
    }

    #[test]
    fn greedy_echelon_parse_is_unique() {
        // On every word of length <= 6 over B2, B3 and D3, the set of valid
        // slot parses is empty or a singleton, and the greedy parse finds it.
        for name in ["B2", "B3", "D3"] {
            let s = sys(name);
            let gc = s.generator_count();
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            let mut layer: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..6 {
                let mut next_layer = Vec::new();
                for base in &layer {
                    for l in 1..=gc {
                        let mut w2 = base.clone();
                        w2.push(l);
                        next_layer.push(w2);
                    }
                }
                words.extend(next_layer.iter().cloned());
                layer = next_layer;
            }
            for letters in &words {
                let mut parses = Vec::new();
                all_echelon_parses(letters, &s, 1, &mut parses, &mut Vec::new());
                let greedy = is_echelon(&Word(letters.clone()), &s).unwrap();
                match (parses.len(), greedy) {
                    (0, None) => {}
                    (1, Some(form)) => assert_eq!(form.deltas(), &parses[0][..], "{name} {letters:?}"),
                    (n, g) => panic!("{name} {letters:?}: {n} parses, greedy {:?}", g.map(|f| f.deltas().to_vec())),
                }
            }
        }
    }

    #[test]
    fn steps_never_increase_content() {
        // Exhaustive over short words and all applicable steps.
        for name in ["A3", "B3", "D4"] {
            let s = sys(name);
            let gc = s.generator_count();
            let mut stack = vec![vec![]];
            while let Some(letters) = stack.pop() {
                if letters.len() < 5 {
                    for l in 1..=gc {
                        let mut w2 = letters.clone();
                        w2.push(l);
                        stack.push(w2);
                    }
                }
                let word = Word(letters);
                let before = content(&word, &s).unwrap();
                for step in all_steps(word.len()) {
                    if let Ok(after_word) = apply_step(&word, &step, &s) {
                        let after = content(&after_word, &s).unwrap();
                        assert!(
                            lex_leq(&after, &before).unwrap(),
                            "{name} {word} {step:?} raised content"
                        );
                    }
                }
            }
        }
    }

    fn all_steps(len: usize) -> Vec<AdmissibleStep> {
        let mut steps = Vec::new();
        for pos in 0..len {
            steps.push(AdmissibleStep::Cancel { pos });
            steps.push(AdmissibleStep::Commute { pos });
            steps.push(AdmissibleStep::ReplaceBraid { pos });
            steps.push(AdmissibleStep::TentCommute { pos });
        }
        for cut in 0..=len {
            steps.push(AdmissibleStep::Circular { cut });
        }
        steps
    }

    #[test]
    fn to_echelon_preserves_conjugacy_small() {
        // Every word of length <= 5 over B2 and D3.
        for name in ["B2", "D3"] {
            let s = sys(name);
            let table = enumerate_group(&s).unwrap();
            let gc = s.generator_count();
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..5 {
                let snapshot = words.clone();
                for base in snapshot {
                    for l in 1..=gc {
                        let mut w2 = base.clone();
                        w2.push(l);
                        if w2.len() <= 5 && !words.contains(&w2) {
                            words.push(w2);
                        }
                    }
                }
            }
            for letters in words {
                let word = Word(letters);
                let (form, trace) = to_echelon(&word, &s).unwrap();
                trace.replay(&s).unwrap();
                let before = content(&word, &s).unwrap();
                let after = content(&form.flatten(), &s).unwrap();
                assert!(lex_leq(&after, &before).unwrap());
                let x = table.eval_word_index(&word).unwrap();
                let y = table.eval_word_index(&form.flatten()).unwrap();
                assert!(
                    conjugator_search(x, y, &table).is_some(),
                    "{name}: {word} not conjugate to {}",
                    form.flatten()
                );
            }
        }
    }

    #[test]
    fn non_circular_steps_preserve_the_element() {
        let s = sys("B3");
        let word = w(&[3, 1, 2, 1, 3, 2, 1, 2]);
        let (_, trace) = to_echelon(&word, &s).unwrap();
        let mut current = trace.start.clone();
        for step in &trace.steps {
            let next = apply_step(&current, step, &s).unwrap();
            if !matches!(step, AdmissibleStep::Circular { .. }) {
                assert_eq!(
                    eval_word(&next, &s).unwrap(),
                    eval_word(&current, &s).unwrap(),
                    "non-circular step changed the element"
                );
            }
            current = next;
        }
    }

    #[test]
    fn merge_decisions() {
        let d3 = sys("D3");
        // t1 then slot-n vs t1 then slot-(n+1): fork length 3, merged by rule.
        let e1 = is_echelon(&w(&[1, 2, 3, 1, 2]), &d3).unwrap().unwrap();
        let e2 = is_echelon(&w(&[1, 2, 3, 1, 3]), &d3).unwrap().unwrap();
        let d = echelon_conjugacy_merge(&e1, &e2, &d3).unwrap();
        assert!(d.conjugate);
        assert_eq!(d.path, MergePath::ForkLengthRule);
        // Double-check the rule against brute force.
        let table = enumerate_group(&d3).unwrap();
        let x = table.eval_word_index(&e1.flatten()).unwrap();
        let y = table.eval_word_index(&e2.flatten()).unwrap();
        assert!(conjugator_search(x, y, &table).is_some());

        // Equal words.
        let d = echelon_conjugacy_merge(&e1, &e1, &d3).unwrap();
        assert!(d.conjugate);
        assert_eq!(d.path, MergePath::EqualWords);

        // Short fork: decided by brute force.
        let e1 = is_echelon(&w(&[2]), &d3).unwrap().unwrap();
        let e2 = is_echelon(&w(&[3]), &d3).unwrap().unwrap();
        let d = echelon_conjugacy_merge(&e1, &e2, &d3).unwrap();
        assert_eq!(d.path, MergePath::BruteForce);
        assert!(d.conjugate);

        // Mismatched content errors.
        let e3 = is_echelon(&w(&[1]), &d3).unwrap().unwrap();
        assert!(echelon_conjugacy_merge(&e1, &e3, &d3).is_err());
    }

    #[test]
    fn step_json_shape() {
        let step = AdmissibleStep::Circular { cut: 2 };
        assert_eq!(serde_json::to_string(&step).unwrap(), r#"{"kind":"circular","cut":2}"#);
        let step = AdmissibleStep::ReplaceBraid { pos: 0 };
        assert_eq!(serde_json::to_string(&step).unwrap(), r#"{"kind":"replace-braid","pos":0}"#);
    }
}
