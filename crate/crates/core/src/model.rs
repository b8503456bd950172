//! Source-level program model shared by every other module.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Ground term. Source programs only use integers and lowercase constants;
/// function terms appear in atoms built internally (`appl(choice(2,1))`,
/// `degree(ap(1,1),1,1)`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Int(i64),
    Sym(String),
    Func(String, Vec<Term>),
}

impl Term {
    pub fn sym(name: &str) -> Self {
        Term::Sym(name.to_string())
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Term::Int(v) => Some(*v),
            _ => None,
        }
    }
}

impl From<i64> for Term {
    fn from(v: i64) -> Self {
        Term::Int(v)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Int(v) => write!(f, "{v}"),
            Term::Sym(s) => f.write_str(s),
            Term::Func(name, args) => {
                f.write_str(name)?;
                write_args(f, args)
            }
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, args: &[Term]) -> fmt::Result {
    if args.is_empty() {
        return Ok(());
    }
    f.write_str("(")?;
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str(")")
}

/// A ground atom; the whole atom is one propositional symbol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: &str, args: Vec<Term>) -> Self {
        Atom {
            predicate: predicate.to_string(),
            args,
        }
    }

    pub fn prop(predicate: &str) -> Self {
        Atom::new(predicate, Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    /// The atom with `extra` appended to its arguments: `a(v)` becomes
    /// `a(v, x1, ..., xm)`.
    pub fn extended(&self, extra: &[i64]) -> Atom {
        let mut args = self.args.clone();
        args.extend(extra.iter().map(|&v| Term::Int(v)));
        Atom {
            predicate: self.predicate.clone(),
            args,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        write_args(f, &self.args)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal {
            atom,
            negated: true,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("not ")?;
        }
        write!(f, "{}", self.atom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleKind {
    Regular,
    Ordered,
    Cr,
    OrderedCr,
}

impl RuleKind {
    pub fn is_cr(self) -> bool {
        matches!(self, RuleKind::Cr | RuleKind::OrderedCr)
    }

    pub fn is_ordered(self) -> bool {
        matches!(self, RuleKind::Ordered | RuleKind::OrderedCr)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Head {
    /// `a`
    Atom(Atom),
    /// Empty head: the rule is a constraint.
    Falsum,
    /// `l {a1; ...; aq} u`
    Choice {
        lower: Option<u32>,
        upper: Option<u32>,
        atoms: Vec<Atom>,
    },
    /// `c1 * ... * cn`
    Ordered(Vec<Atom>),
}

impl Head {
    pub fn atoms(&self) -> &[Atom] {
        match self {
            Head::Atom(a) => core::slice::from_ref(a),
            Head::Falsum => &[],
            Head::Choice { atoms, .. } | Head::Ordered(atoms) => atoms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub kind: RuleKind,
    pub head: Head,
    pub body: Vec<Literal>,
    pub label: Option<String>,
    /// Position among the non-regular rules, assigned by [`canonicalize`].
    pub index: Option<usize>,
}

impl Rule {
    pub fn regular(head: Head, body: Vec<Literal>) -> Self {
        Rule {
            kind: RuleKind::Regular,
            head,
            body,
            label: None,
            index: None,
        }
    }

    pub fn ordered(kind: RuleKind, head: Vec<Atom>, body: Vec<Literal>) -> Self {
        Rule {
            kind,
            head: Head::Ordered(head),
            body,
            label: None,
            index: None,
        }
    }

    /// Number of head atoms (`n_i` for ordered rules).
    pub fn head_len(&self) -> usize {
        self.head.atoms().len()
    }

    pub fn positive_body(&self) -> impl Iterator<Item = &Atom> {
        self.body.iter().filter(|l| !l.negated).map(|l| &l.atom)
    }

    pub fn negative_body(&self) -> impl Iterator<Item = &Atom> {
        self.body.iter().filter(|l| l.negated).map(|l| &l.atom)
    }

    /// Does `interp` satisfy the body of this rule?
    pub fn body_holds(&self, interp: &BTreeSet<Atom>) -> bool {
        self.body
            .iter()
            .all(|l| interp.contains(&l.atom) != l.negated)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dialect {
    Lpod,
    Crp2,
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dialect::Lpod => "lpod",
            Dialect::Crp2 => "crp2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub dialect: Dialect,
    pub rules: Vec<Rule>,
    /// `prefer(l1, l2)` facts, by label.
    pub prefer: Vec<(String, String)>,
}

impl Program {
    pub fn new(dialect: Dialect) -> Self {
        Program {
            dialect,
            rules: Vec::new(),
            prefer: Vec::new(),
        }
    }

    /// σ: every atom occurring in the program.
    pub fn signature(&self) -> BTreeSet<Atom> {
        let mut sigma = BTreeSet::new();
        for r in &self.rules {
            sigma.extend(r.head.atoms().iter().cloned());
            sigma.extend(r.body.iter().map(|l| l.atom.clone()));
        }
        sigma
    }

    pub fn regular_rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().filter(|r| r.kind == RuleKind::Regular)
    }

    /// Non-regular rules sorted by index. Requires a canonicalized program.
    pub fn indexed_rules(&self) -> Vec<&Rule> {
        let mut rules: Vec<&Rule> = self.rules.iter().filter(|r| r.index.is_some()).collect();
        rules.sort_by_key(|r| r.index);
        rules
    }

    /// m, the number of indexed rules.
    pub fn indexed_count(&self) -> usize {
        self.rules.iter().filter(|r| r.index.is_some()).count()
    }

    /// (k, l, m): cr-rules are 1..=k, ordered cr-rules k+1..=l, ordered
    /// rules l+1..=m. For LPOD programs k = l = 0.
    pub fn crp_bounds(&self) -> (usize, usize, usize) {
        let k = self.rules.iter().filter(|r| r.kind == RuleKind::Cr).count();
        let ocr = self
            .rules
            .iter()
            .filter(|r| r.kind == RuleKind::OrderedCr)
            .count();
        (k, k + ocr, self.indexed_count())
    }

    /// Head sizes `n_1 .. n_m` in index order (1 for cr-rules).
    pub fn head_sizes(&self) -> Vec<usize> {
        self.indexed_rules().iter().map(|r| r.head_len()).collect()
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.rules
            .iter()
            .find(|r| r.label.as_deref() == Some(label))
            .and_then(|r| r.index)
    }

    /// Prefer facts resolved to rule indices. Unknown labels are skipped;
    /// [`validate_program`] reports them.
    pub fn prefer_indices(&self) -> Vec<(usize, usize)> {
        self.prefer
            .iter()
            .filter_map(|(a, b)| Some((self.index_of_label(a)?, self.index_of_label(b)?)))
            .collect()
    }
}

/// A set of atoms, optionally carrying the weak-constraint penalty.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnswerSet {
    pub atoms: BTreeSet<Atom>,
    pub penalty: Option<i64>,
}

impl AnswerSet {
    pub fn new(atoms: BTreeSet<Atom>) -> Self {
        AnswerSet {
            atoms,
            penalty: None,
        }
    }

    pub fn project(&self, sigma: &BTreeSet<Atom>) -> BTreeSet<Atom> {
        self.atoms.intersection(sigma).cloned().collect()
    }
}

impl fmt::Display for AnswerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_atom_set(f, &self.atoms)
    }
}

pub fn write_atom_set(f: &mut fmt::Formatter<'_>, atoms: &BTreeSet<Atom>) -> fmt::Result {
    f.write_str("{")?;
    for (i, a) in atoms.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str("}")
}

/// Satisfaction degrees `(d_1, ..., d_m)`, each in `1..=n_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeList(pub Vec<u32>);

/// Assumption degrees `(x_1, ..., x_m)` naming an assumption program.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssumptionList(pub Vec<u32>);

impl AssumptionList {
    /// Degrees implied by the assumption: `d_i = 1` if `x_i = 0`, else `x_i`.
    pub fn degrees(&self) -> DegreeList {
        DegreeList(self.0.iter().map(|&x| x.max(1)).collect())
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| i64::from(x)).collect()
    }
}

/// All tuples of the product of the inclusive ranges, in lexicographic order.
pub fn tuples(domains: &[(u32, u32)]) -> Vec<AssumptionList> {
    let mut out = alloc::vec![AssumptionList(Vec::new())];
    for &(lo, hi) in domains {
        out = out
            .into_iter()
            .flat_map(|t| {
                (lo..=hi).map(move |v| {
                    let mut next = t.0.clone();
                    next.push(v);
                    AssumptionList(next)
                })
            })
            .collect();
    }
    out
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

impl fmt::Display for DegreeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for AssumptionList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Predicates introduced by the translations and the CR-Prolog2 semantics.
pub const RESERVED_PREDICATES: &[&str] = &[
    "ap",
    "degree",
    "prf",
    "pAS",
    "card",
    "equ2degree",
    "prf2degree",
    "even",
    "equ",
    "sum",
    "appl",
    "fired",
    "choice",
    "prefer",
    "isPreferred",
    "dominate",
    "candidate",
    "lessCrRulesApplied",
];

/// Constants interpreted by the emitted programs.
pub const RESERVED_CONSTANTS: &[&str] = &["maxdegree"];

pub fn is_reserved_predicate(name: &str) -> bool {
    RESERVED_PREDICATES.contains(&name) || is_body_predicate(name)
}

/// `body_<i>`
fn is_body_predicate(name: &str) -> bool {
    name.strip_prefix("body_")
        .is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    ReservedPredicate(String),
    ReservedConstant(String),
    DuplicateLabel(String),
    ShortOrderedHead { rule: usize, atoms: usize },
    UnknownLabel(String),
    PreferOnNonCrRule(String),
    PreferInLpod,
    CrRuleInLpod { rule: usize },
    BadChoiceBounds { rule: usize },
    BadHead { rule: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ReservedPredicate(p) => write!(f, "reserved predicate {p}"),
            Violation::ReservedConstant(c) => write!(f, "reserved constant {c}"),
            Violation::DuplicateLabel(l) => write!(f, "duplicate label {l}"),
            Violation::ShortOrderedHead { rule, atoms } => write!(
                f,
                "rule {rule}: ordered head has {atoms} atom(s), at least 2 required"
            ),
            Violation::UnknownLabel(l) => write!(f, "unknown label {l}"),
            Violation::PreferOnNonCrRule(l) => {
                write!(f, "prefer refers to {l}, which is not a cr-rule")
            }
            Violation::PreferInLpod => f.write_str("prefer facts are not allowed in LPOD"),
            Violation::CrRuleInLpod { rule } => {
                write!(f, "rule {rule}: cr-rules are not allowed in LPOD")
            }
            Violation::BadChoiceBounds { rule } => {
                write!(f, "rule {rule}: choice lower bound exceeds upper bound")
            }
            Violation::BadHead { rule } => write!(f, "rule {rule}: head does not match rule kind"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

fn collect_constants(term: &Term, out: &mut BTreeSet<String>) {
    match term {
        Term::Int(_) => {}
        Term::Sym(s) => {
            out.insert(s.clone());
        }
        Term::Func(_, args) => args.iter().for_each(|a| collect_constants(a, out)),
    }
}

/// Checks well-formedness. An empty report means the program is valid.
/// Rule numbers in the messages are 1-based textual positions.
pub fn validate_program(p: &Program) -> ValidationReport {
    let p = canonicalize(p);
    let mut violations = Vec::new();

    let mut reserved = BTreeSet::new();
    let mut constants = BTreeSet::new();
    for atom in p.signature() {
        if is_reserved_predicate(&atom.predicate) {
            reserved.insert(atom.predicate.clone());
        }
        atom.args
            .iter()
            .for_each(|t| collect_constants(t, &mut constants));
    }
    violations.extend(reserved.into_iter().map(Violation::ReservedPredicate));
    violations.extend(
        constants
            .into_iter()
            .filter(|c| RESERVED_CONSTANTS.contains(&c.as_str()))
            .map(Violation::ReservedConstant),
    );

    let mut seen = BTreeMap::new();
    for r in &p.rules {
        if let Some(l) = &r.label {
            *seen.entry(l.clone()).or_insert(0usize) += 1;
        }
    }
    violations.extend(
        seen.into_iter()
            .filter(|(_, n)| *n > 1)
            .map(|(l, _)| Violation::DuplicateLabel(l)),
    );

    for (pos, r) in p.rules.iter().enumerate() {
        let rule = pos + 1;
        let head_ok = match (&r.kind, &r.head) {
            (RuleKind::Ordered | RuleKind::OrderedCr, Head::Ordered(atoms)) => {
                if atoms.len() < 2 {
                    violations.push(Violation::ShortOrderedHead {
                        rule,
                        atoms: atoms.len(),
                    });
                }
                true
            }
            (RuleKind::Cr, Head::Atom(_)) => true,
            (RuleKind::Regular, Head::Atom(_) | Head::Falsum) => true,
            (RuleKind::Regular, Head::Choice { lower, upper, .. }) => {
                if let (Some(l), Some(u)) = (lower, upper) {
                    if l > u {
                        violations.push(Violation::BadChoiceBounds { rule });
                    }
                }
                true
            }
            _ => false,
        };
        if !head_ok {
            violations.push(Violation::BadHead { rule });
        }
        if p.dialect == Dialect::Lpod && r.kind.is_cr() {
            violations.push(Violation::CrRuleInLpod { rule });
        }
    }

    if p.dialect == Dialect::Lpod && !p.prefer.is_empty() {
        violations.push(Violation::PreferInLpod);
    }
    for (a, b) in &p.prefer {
        for l in [a, b] {
            match p.rules.iter().find(|r| r.label.as_deref() == Some(l.as_str())) {
                None => violations.push(Violation::UnknownLabel(l.clone())),
                Some(r) if !r.kind.is_cr() => {
                    violations.push(Violation::PreferOnNonCrRule(l.clone()))
                }
                Some(_) => {}
            }
        }
    }
    violations.sort();
    violations.dedup();
    ValidationReport { violations }
}

/// Assigns rule indices and fills in missing labels.
///
/// LPOD: ordered rules get `1..=m` in textual order. CR-Prolog2: cr-rules
/// `1..=k`, ordered cr-rules `k+1..=l`, ordered rules `l+1..=m`, textual
/// order preserved inside each class. Unlabeled indexed rules get `r<index>`
/// (suffixed if that label is taken). Rule order in the vector is unchanged.
pub fn canonicalize(p: &Program) -> Program {
    let mut out = p.clone();
    let classes: &[RuleKind] = match p.dialect {
        Dialect::Lpod => &[RuleKind::Ordered],
        Dialect::Crp2 => &[RuleKind::Cr, RuleKind::OrderedCr, RuleKind::Ordered],
    };
    for r in &mut out.rules {
        r.index = None;
    }
    let mut next = 1;
    for class in classes {
        for r in out.rules.iter_mut().filter(|r| r.kind == *class) {
            r.index = Some(next);
            next += 1;
        }
    }
    let mut taken: BTreeSet<String> = out.rules.iter().filter_map(|r| r.label.clone()).collect();
    for r in &mut out.rules {
        if let (Some(i), None) = (r.index, &r.label) {
            let mut label = format!("r{i}");
            let mut suffix = 1;
            while taken.contains(&label) {
                label = format!("r{i}_{suffix}");
                suffix += 1;
            }
            taken.insert(label.clone());
            r.label = Some(label);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use alloc::vec;

    const PI1: &str = "a * b :- not c.  b * c :- not d.";
    const PI3: &str =
        "r1: t :+.  r2: q * s :+.  q :- t.  s :- t.  p :- not q.  r :- not s.  :- p, r.";

    #[test]
    fn pi1_is_valid() {
        let p = parse(PI1, Dialect::Lpod).unwrap();
        assert!(validate_program(&p).is_valid());
    }

    #[test]
    fn reserved_predicate_is_reported() {
        let p = parse("a :- ap(1).", Dialect::Lpod).unwrap();
        let report = validate_program(&p);
        assert_eq!(
            report.violations,
            vec![Violation::ReservedPredicate("ap".into())]
        );
        assert_eq!(report.violations[0].to_string(), "reserved predicate ap");
    }

    #[test]
    fn body_predicates_and_maxdegree_are_reserved() {
        let p = parse("body_2 :- p(maxdegree). body_x.", Dialect::Lpod).unwrap();
        let report = validate_program(&p);
        assert!(report
            .violations
            .contains(&Violation::ReservedPredicate("body_2".into())));
        assert!(report
            .violations
            .contains(&Violation::ReservedConstant("maxdegree".into())));
        assert!(!report
            .violations
            .contains(&Violation::ReservedPredicate("body_x".into())));
    }

    #[test]
    fn dangling_prefer_label() {
        let p = parse(&format!("{PI3} prefer(r9, r1)."), Dialect::Crp2).unwrap();
        let report = validate_program(&p);
        assert_eq!(report.violations, vec![Violation::UnknownLabel("r9".into())]);
        assert_eq!(report.violations[0].to_string(), "unknown label r9");
    }

    #[test]
    fn duplicate_labels_and_short_heads() {
        let mut p = parse("x: a * b. x: c * d.", Dialect::Lpod).unwrap();
        p.rules.push(Rule::ordered(
            RuleKind::Ordered,
            vec![Atom::prop("e")],
            vec![],
        ));
        let report = validate_program(&p);
        assert!(report
            .violations
            .contains(&Violation::DuplicateLabel("x".into())));
        assert!(report
            .violations
            .contains(&Violation::ShortOrderedHead { rule: 3, atoms: 1 }));
    }

    #[test]
    fn prefer_must_target_cr_rules() {
        let p = parse("o: a * b. c1: c :+. prefer(o, c1).", Dialect::Crp2).unwrap();
        assert_eq!(
            validate_program(&p).violations,
            vec![Violation::PreferOnNonCrRule("o".into())]
        );
    }

    #[test]
    fn canonical_indices_pi3() {
        let p = parse(PI3, Dialect::Crp2).unwrap();
        assert_eq!(p.crp_bounds(), (1, 2, 2));
        let idx = p.indexed_rules();
        assert_eq!(idx[0].head, Head::Atom(Atom::prop("t")));
        assert_eq!(idx[0].index, Some(1));
        assert_eq!(
            idx[1].head,
            Head::Ordered(vec![Atom::prop("q"), Atom::prop("s")])
        );
        assert_eq!(idx[1].index, Some(2));
    }

    #[test]
    fn canonical_indices_reorder_classes() {
        // ordered rule written first still gets the last index
        let p = parse("a * b. c :+. d * e :+.", Dialect::Crp2).unwrap();
        let kinds: Vec<_> = p.indexed_rules().iter().map(|r| r.kind).collect();
        assert_eq!(
            kinds,
            vec![RuleKind::Cr, RuleKind::OrderedCr, RuleKind::Ordered]
        );
        assert_eq!(p.rules[0].label.as_deref(), Some("r3"));
    }

    #[test]
    fn canonical_indices_pi1() {
        let p = parse(PI1, Dialect::Lpod).unwrap();
        assert_eq!(p.rules[0].index, Some(1));
        assert_eq!(p.rules[1].index, Some(2));
        assert_eq!(p.head_sizes(), vec![2, 2]);
    }

    #[test]
    fn regular_only_program_has_no_indices() {
        let p = parse("a. b :- a.", Dialect::Lpod).unwrap();
        assert_eq!(p.indexed_count(), 0);
        assert_eq!(canonicalize(&p), p);
    }

    #[test]
    fn auto_labels_avoid_collisions() {
        let p = parse("r1: a :+. b :+.", Dialect::Crp2).unwrap();
        // the second cr-rule has index 2 and gets r2
        assert_eq!(p.rules[1].label.as_deref(), Some("r2"));
        let p = parse("r2: a :+. b :+. ", Dialect::Crp2).unwrap();
        assert_eq!(p.rules[1].label.as_deref(), Some("r2_1"));
    }

    #[test]
    fn tuple_product_is_lexicographic() {
        let t = tuples(&[(0, 1), (1, 2)]);
        let raw: Vec<Vec<u32>> = t.into_iter().map(|a| a.0).collect();
        assert_eq!(raw, vec![vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2]]);
        assert_eq!(tuples(&[]), vec![AssumptionList(vec![])]);
    }

    #[test]
    fn degrees_from_assumption() {
        assert_eq!(
            AssumptionList(vec![0, 2, 1]).degrees(),
            DegreeList(vec![1, 2, 1])
        );
    }
}
