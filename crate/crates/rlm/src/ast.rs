//! Script AST: declarations, predicate expressions over the point variables
//! m and n, statement expressions, and commands with optional inline
//! expectations.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithExpr {
    Num(i64),
    M,
    N,
    Neg(Box<ArithExpr>),
    Abs(Box<ArithExpr>),
    /// (-1) to the power of the argument.
    Sign(Box<ArithExpr>),
    Add(Box<ArithExpr>, Box<ArithExpr>),
    Sub(Box<ArithExpr>, Box<ArithExpr>),
    Mul(Box<ArithExpr>, Box<ArithExpr>),
    Div(Box<ArithExpr>, Box<ArithExpr>),
    Mod(Box<ArithExpr>, Box<ArithExpr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoolExpr {
    Cmp(CmpOp, ArithExpr, ArithExpr),
    In(ArithExpr, Vec<i64>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
    Not(Box<BoolExpr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TagKind {
    Tr,
    Li,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtExpr {
    Name(String),
    And(Box<StmtExpr>, Box<StmtExpr>),
    Or(Box<StmtExpr>, Box<StmtExpr>),
    Implies(Box<StmtExpr>, Box<StmtExpr>),
    Iff(Box<StmtExpr>, Box<StmtExpr>),
    TagTr(Box<StmtExpr>),
    TagLi(Box<StmtExpr>),
    ForAll(Vec<String>, TagKind),
    Exists(Vec<String>, TagKind),
    Chain(Vec<StmtExpr>, usize),
}

impl StmtExpr {
    /// Canonical source form, used for report targets and the round-trip
    /// stability of printing.
    pub fn print(&self) -> String {
        match self {
            StmtExpr::Name(n) => n.clone(),
            StmtExpr::And(a, b) => format!("and({}, {})", a.print(), b.print()),
            StmtExpr::Or(a, b) => format!("or({}, {})", a.print(), b.print()),
            StmtExpr::Implies(a, b) => format!("implies({}, {})", a.print(), b.print()),
            StmtExpr::Iff(a, b) => format!("iff({}, {})", a.print(), b.print()),
            StmtExpr::TagTr(a) => format!("tag_tr({})", a.print()),
            StmtExpr::TagLi(a) => format!("tag_li({})", a.print()),
            StmtExpr::ForAll(ns, t) => format!("forall({{{}}}, {})", ns.join(", "), tag(t)),
            StmtExpr::Exists(ns, t) => format!("exists({{{}}}, {})", ns.join(", "), tag(t)),
            StmtExpr::Chain(ss, b) => format!(
                "chain({{{}}}, {b})",
                ss.iter().map(StmtExpr::print).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

fn tag(t: &TagKind) -> &'static str {
    match t {
        TagKind::Tr => "tr",
        TagKind::Li => "li",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PluralitySpec {
    MetricBalls(Vec<i64>),
    MetricBallsOpen,
    Group(Vec<Vec<String>>),
    Family(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpec {
    From(String),
    Zigzag(usize),
    ProductGrid(usize),
    LexGrid(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassExpect {
    pub class: String,
    pub domain: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderExpect {
    pub kind: String,
    pub chain: Option<Vec<String>>,
    /// Some(None) encodes `minimal none`.
    pub minimal: Option<Option<String>>,
    pub maximals: Option<Vec<String>>,
    pub roots: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagRule {
    Flip,
    Adversarial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Classify {
        expr: StmtExpr,
        expect: Option<ClassExpect>,
    },
    TruthDomain {
        expr: StmtExpr,
        expect: Option<Vec<String>>,
    },
    ImplicationType {
        r: String,
        s: String,
        expect: Option<String>,
    },
    Taxonomy {
        name: String,
        expect: Option<String>,
    },
    FilterQ {
        name: String,
        expect: Option<bool>,
    },
    GroupQ {
        name: String,
        expect: Option<bool>,
    },
    OrderReport {
        name: String,
        expect: Option<OrderExpect>,
    },
    Compare {
        order: String,
        x: String,
        y: String,
        expect: Option<String>,
    },
    Laws {
        trials: Option<u64>,
        seed: Option<u64>,
    },
    RefuteClassical {
        seed: Option<u64>,
    },
    Bijection {
        x: String,
        y: String,
        p: String,
        q: String,
        expect_bijective: bool,
    },
    Diagonal {
        base: u32,
        rule: DiagRule,
        words: Vec<String>,
        expect_differs: bool,
        expect_hazard: bool,
    },
    CantorQ {
        numer: i64,
        denom: i64,
        depth: usize,
        expect: Option<bool>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Universe {
        name: String,
        labels: Vec<String>,
    },
    RelationPred {
        name: String,
        pred: BoolExpr,
    },
    RelationPairs {
        name: String,
        pairs: Vec<(String, String)>,
    },
    Set {
        name: String,
        labels: Vec<String>,
    },
    Statement {
        name: String,
        expr: StmtExpr,
    },
    Plurality {
        name: String,
        spec: PluralitySpec,
    },
    Order {
        name: String,
        spec: OrderSpec,
    },
    Command(Command),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub decl: Decl,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub lines: Vec<Line>,
}
