//! Identifiers for the rules of the extensional calculi, one per printed
//! rule, including the structural rules shared with the intensional level.

/// Every rule of emTT and emTT-dp.
///
/// The doc comment of each variant names the metavariables its
/// instantiation must supply (see [`crate::Inst`]); `fam_k` means an
/// `abss` entry of arity `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    // ---- contexts and assumptions ----
    /// The empty context is a context. No metavariables; `ctx` empty.
    ContEmpty,
    /// Context extension by `A col [ctx]`; expr `A`, fresh `name`.
    ContExt,
    /// Assumption `x in A` from a context containing it; expr `x` (a
    /// variable).
    Var,

    // ---- embeddings between sorts ----
    /// expr `A`.
    SetIntoCol,
    /// expr `A`.
    PropIntoCol,
    /// expr `A`.
    PropSIntoSet,
    /// expr `A`.
    PropSIntoProp,

    // ---- equality is an equivalence; substitution; conversion ----
    /// expr `A`; `sort`.
    RefTy,
    /// exprs `A`, `B`; `sort`.
    SymTy,
    /// exprs `A`, `B`, `C`; `sort`.
    TraTy,
    /// `tel`, fam_n `C`, lists `a`, `b`; `sort`.
    SubT,
    /// exprs `a`, `A`.
    RefTm,
    /// exprs `a`, `b`, `A`.
    SymTm,
    /// exprs `a`, `b`, `c`, `A`.
    TraTm,
    /// `tel`, fam_n `c`, fam_n `C`, lists `a`, `b`.
    Sub,
    /// exprs `a`, `A`, `B`; `sort` of the type equality.
    Conv,
    /// exprs `a`, `b`, `A`, `B`; `sort` of the type equality.
    ConvEq,

    // ---- strong indexed sum (collection level) ----
    /// expr `B`, fam_1 `C`.
    FSigma,
    /// exprs `B`, `b`, `c`, fam_1 `C`.
    ISigma,
    /// exprs `B`, `d`, fam_1 `C`, fam_1 `M`, fam_2 `m`.
    ESigma,
    /// exprs `B`, `b`, `c`, fam_1 `C`, fam_1 `M`, fam_2 `m`.
    CSigma,

    // ---- empty set ----
    FN0,
    /// expr `a`, fam_1 `A`.
    EN0,

    // ---- singleton set ----
    FN1,
    IN1,
    /// exprs `t`, `c`, fam_1 `M`.
    CN1,

    // ---- strong indexed sum (set level) ----
    /// expr `B`, fam_1 `C`.
    FSigmaSet,

    // ---- lists ----
    /// expr `C`.
    FList,
    /// expr `C`.
    I1List,
    /// exprs `C`, `s`, `c`.
    I2List,
    /// exprs `C`, `s`, `a`, fam_1 `L`, fam_3 `l`.
    EList,
    /// exprs `C`, `a`, fam_1 `L`, fam_3 `l`.
    C1List,
    /// exprs `C`, `s`, `c`, `a`, fam_1 `L`, fam_3 `l`.
    C2List,

    // ---- disjoint sum ----
    /// exprs `B`, `C`.
    FPlus,
    /// exprs `B`, `C`, `b`.
    I1Plus,
    /// exprs `B`, `C`, `c`.
    I2Plus,
    /// exprs `B`, `C`, `w`, fam_1 `A`, fam_1 `aB`, fam_1 `aC`.
    EPlus,
    /// exprs `B`, `C`, `b`, fam_1 `A`, fam_1 `aB`, fam_1 `aC`.
    C1Plus,
    /// exprs `B`, `C`, `c`, fam_1 `A`, fam_1 `aB`, fam_1 `aC`.
    C2Plus,

    // ---- dependent product (set level) ----
    /// expr `B`, fam_1 `C`.
    FPi,
    /// expr `B`, fam_1 `C`, fam_1 `c`.
    IPi,
    /// exprs `B`, `b`, `f`, fam_1 `C`.
    EPi,
    /// exprs `B`, `b`, fam_1 `C`, fam_1 `c`.
    BetaPi,
    /// exprs `B`, `f`, fam_1 `C`.
    EtaPi,

    // ---- quotient sets ----
    /// expr `A`, fam_2 `R`.
    FQuot,
    /// exprs `A`, `a`, fam_2 `R`.
    IQuot,
    /// exprs `A`, `a`, `b`, fam_2 `R`: equal classes from related elements.
    QClassEq,
    /// exprs `A`, `p`, fam_2 `R`, fam_1 `L`, fam_1 `l`.
    EQuot,
    /// exprs `A`, `a`, fam_2 `R`, fam_1 `L`, fam_1 `l`.
    CQuot,
    /// Effectiveness; exprs `A`, `a`, `b`, fam_2 `R`.
    Eff,

    // ---- proof irrelevance ----
    /// exprs `A`, `p`, `q`.
    PropMono,
    /// exprs `A`, `p`.
    PropTrue,

    // ---- falsum ----
    FBot,
    /// expr `A`.
    EBot,

    // ---- extensional propositional equality ----
    /// exprs `C`, `c`, `d`.
    FEq,
    /// exprs `C`, `c`.
    IEq,
    /// exprs `C`, `c`, `d`.
    EEq,

    // ---- implication ----
    /// exprs `B`, `C`.
    FImp,
    /// exprs `B`, `C`.
    IImp,
    /// exprs `B`, `C`.
    EImp,

    // ---- conjunction ----
    /// exprs `B`, `C`.
    FAnd,
    /// exprs `B`, `C`.
    IAnd,
    /// exprs `B`, `C`.
    E1And,
    /// exprs `B`, `C`.
    E2And,

    // ---- disjunction ----
    /// exprs `B`, `C`.
    FOr,
    /// exprs `B`, `C`.
    I1Or,
    /// exprs `B`, `C`.
    I2Or,
    /// exprs `A`, `B`, `C`.
    EOr,

    // ---- existential quantification ----
    /// expr `B`, fam_1 `C`.
    FExists,
    /// exprs `B`, `b`, fam_1 `C`.
    IExists,
    /// exprs `B`, `M`, fam_1 `C`.
    EExists,

    // ---- universal quantification ----
    /// expr `B`, fam_1 `C`.
    FForall,
    /// expr `B`, fam_1 `C`.
    IForall,
    /// exprs `B`, `b`, fam_1 `C`.
    EForall,

    // ---- small propositions ----
    BotPropS,
    /// exprs `B`, `C`.
    OrPropS,
    /// exprs `B`, `C`.
    ImpPropS,
    /// exprs `B`, `C`.
    AndPropS,
    /// expr `B`, fam_1 `C`.
    ExistsPropS,
    /// expr `B`, fam_1 `C`.
    ForallPropS,
    /// exprs `A`, `a`, `b`.
    EqPropS,

    // ---- power collection of the singleton ----
    FPow1,
    /// expr `B`.
    IPow1,
    /// exprs `B`, `C`.
    EqPow1,
    /// exprs `B`, `C`.
    EffPow1,
    /// expr `U`.
    EtaPow1,

    // ---- function collections toward the power of the singleton ----
    /// expr `B`.
    FFc,
    /// expr `B`, fam_1 `c`.
    IFc,
    /// exprs `B`, `b`, `f`.
    EFc,
    /// exprs `B`, `b`, fam_1 `c`.
    BetaFc,
    /// exprs `B`, `f`.
    EtaFc,

    // ---- type-equality congruences ----
    /// exprs `B`, `E`, fam_1 `C`, fam_1 `D`.
    EqSigma,
    /// exprs `B`, `E`.
    EqFc,
    /// exprs `C`, `D`.
    EqList,
    /// exprs `B`, `E`, fam_1 `C`, fam_1 `D`.
    EqSigmaSet,
    /// exprs `B`, `C`, `D`, `E`.
    EqPlus,
    /// exprs `B`, `E`, fam_1 `C`, fam_1 `D`.
    EqPi,
    /// exprs `A`, `B`, fam_2 `R`, fam_2 `S`.
    EqQuot,
    /// exprs `B`, `C`, `D`, `E`.
    EqOr,
    /// exprs `B`, `C`, `D`, `E`.
    EqImp,
    /// exprs `B`, `C`, `D`, `E`.
    EqAnd,
    /// exprs `A`, `E`, `a`, `b`, `c`, `e`.
    EqEq,
    /// exprs `B`, `E`, fam_1 `C`, fam_1 `D`.
    EqExists,
    /// exprs `B`, `E`, fam_1 `C`, fam_1 `D`.
    EqForall,
    /// Small-proposition restrictions of the six propositional congruences.
    EqOrPropS,
    EqImpPropS,
    EqAndPropS,
    /// exprs `A`, `E`, `a`, `b`, `c`, `e` (with `A = E set`).
    EqEqPropS,
    EqExistsPropS,
    EqForallPropS,

    // ---- transfer of type equality along the embeddings ----
    /// exprs `A`, `B`.
    PropIntoColEq,
    /// exprs `A`, `B`.
    PropSEq1,
    /// exprs `A`, `B`.
    PropSEq2,
    /// exprs `A`, `B`.
    PropSIntoPropEq,
    /// exprs `A`, `B`.
    PropSIntoSetEq,
    /// exprs `A`, `B`.
    SetIntoColEq,

    // ---- term-equality congruences ----
    /// exprs `B`, `b`, `b'`, `c`, `c'`, fam_1 `C`.
    IEqSigma,
    /// exprs `B`, `d`, `d'`, fam_1 `C`, fam_1 `M`, fam_2 `m`, fam_2 `m'`.
    EEqSigma,
    /// exprs `a`, `a'`, fam_1 `A`.
    EEqN0,
    /// exprs `t`, `t'`, `c`, `c'`, fam_1 `M`.
    EEqN1,
    /// exprs `C`, `s`, `s'`, `c`, `c'`.
    I2EqList,
    /// exprs `C`, `s`, `s'`, `a`, `a'`, fam_1 `L`, fam_3 `l`, fam_3 `l'`.
    EEqList,
    /// exprs `A`, `a`, `a'`, fam_2 `R`.
    IEqQuot,
    /// exprs `A`, `p`, `p'`, fam_2 `R`, fam_1 `L`, fam_1 `l`, fam_1 `l'`.
    EEqQuot,
    /// exprs `B`, `C`, `b`, `b'`.
    I1EqPlus,
    /// exprs `B`, `C`, `c`, `c'`.
    I2EqPlus,
    /// exprs `B`, `C`, `d`, `d'`, fam_1 `A`, fam_1 `aB`, fam_1 `aB'`,
    /// fam_1 `aC`, fam_1 `aC'`.
    EEqPlus,
    /// The xi-rule; exprs `B`, fam_1 `C`, fam_1 `c`, fam_1 `c'`.
    IEqPi,
    /// exprs `B`, `b`, `b'`, `f`, `f'`, fam_1 `C`.
    EEqPi,
    /// expr `B`, fam_1 `c`, fam_1 `c'`.
    IEqFc,
    /// exprs `B`, `b`, `b'`, `f`, `f'`.
    EEqFc,

    // ---- emTT-dp: dependent product collections ----
    /// expr `B`, fam_1 `C`.
    FPiCol,
    /// expr `B`, fam_1 `C`, fam_1 `c`.
    IPiCol,
    /// exprs `B`, `b`, `f`, fam_1 `C`.
    EPiCol,
    /// exprs `B`, `b`, fam_1 `C`, fam_1 `c`.
    BetaPiCol,
    /// exprs `B`, `f`, fam_1 `C`.
    EtaPiCol,

    // ---- emTT-dp: quotient collections ----
    /// expr `A`, fam_2 `R`.
    QuotCol,
    /// exprs `A`, `a`, fam_2 `R`.
    IQuotCol,
    /// exprs `A`, `a`, `b`, fam_2 `R`.
    QClassEqCol,
    /// exprs `A`, `p`, fam_2 `R`, fam_1 `L`, fam_1 `l`.
    EQuotCol,
    /// exprs `A`, `a`, fam_2 `R`, fam_1 `L`, fam_1 `l`.
    CQuotCol,
    /// exprs `A`, `a`, `b`, fam_2 `R`.
    EffCol,

    // ---- emTT-dp: the corresponding equality rules ----
    /// exprs `B`, `E`, fam_1 `C`, fam_1 `D`.
    EqPiCol,
    /// expr `B`, fam_1 `C`, fam_1 `c`, fam_1 `c'`.
    IEqPiCol,
    /// exprs `B`, `b`, `b'`, `f`, `f'`, fam_1 `C`.
    EEqPiCol,
    /// exprs `A`, `B`, fam_2 `R`, fam_2 `S`.
    EqQuotCol,
    /// exprs `A`, `a`, `a'`, fam_2 `R`.
    IEqQuotCol,
    /// exprs `A`, `p`, `p'`, fam_2 `R`, fam_1 `L`, fam_1 `l`, fam_1 `l'`.
    EEqQuotCol,
}

impl RuleId {
    /// Stable textual identifier used by the certificate format.
    pub fn name(self) -> &'static str {
        use RuleId::*;
        match self {
            ContEmpty => "cont-empty",
            ContExt => "cont-ext",
            Var => "var",
            SetIntoCol => "set-into-col",
            PropIntoCol => "prop-into-col",
            PropSIntoSet => "props-into-set",
            PropSIntoProp => "props-into-prop",
            RefTy => "ref-ty",
            SymTy => "sym-ty",
            TraTy => "tra-ty",
            SubT => "subT",
            RefTm => "ref-tm",
            SymTm => "sym-tm",
            TraTm => "tra-tm",
            Sub => "sub",
            Conv => "conv",
            ConvEq => "conv-eq",
            FSigma => "F-Sigma",
            ISigma => "I-Sigma",
            ESigma => "E-Sigma",
            CSigma => "C-Sigma",
            FN0 => "F-N0",
            EN0 => "E-N0",
            FN1 => "F-N1",
            IN1 => "I-N1",
            CN1 => "C-N1",
            FSigmaSet => "F-Sigma-s",
            FList => "F-List",
            I1List => "I1-List",
            I2List => "I2-List",
            EList => "E-List",
            C1List => "C1-List",
            C2List => "C2-List",
            FPlus => "F-Plus",
            I1Plus => "I1-Plus",
            I2Plus => "I2-Plus",
            EPlus => "E-Plus",
            C1Plus => "C1-Plus",
            C2Plus => "C2-Plus",
            FPi => "F-Pi",
            IPi => "I-Pi",
            EPi => "E-Pi",
            BetaPi => "beta-Pi",
            EtaPi => "eta-Pi",
            FQuot => "Q",
            IQuot => "I-Q",
            QClassEq => "eq-Q-class",
            EQuot => "E-Q",
            CQuot => "C-Q",
            Eff => "eff",
            PropMono => "prop-mono",
            PropTrue => "prop-true",
            FBot => "F-Falsum",
            EBot => "E-Falsum",
            FEq => "F-Eq",
            IEq => "I-Eq",
            EEq => "E-Eq",
            FImp => "F-Imp",
            IImp => "I-Imp",
            EImp => "E-Imp",
            FAnd => "F-And",
            IAnd => "I-And",
            E1And => "E1-And",
            E2And => "E2-And",
            FOr => "F-Or",
            I1Or => "I1-Or",
            I2Or => "I2-Or",
            EOr => "E-Or",
            FExists => "F-Exists",
            IExists => "I-Exists",
            EExists => "E-Exists",
            FForall => "F-Forall",
            IForall => "I-Forall",
            EForall => "E-Forall",
            BotPropS => "Falsum-props",
            OrPropS => "Or-props",
            ImpPropS => "Imp-props",
            AndPropS => "And-props",
            ExistsPropS => "Exists-props",
            ForallPropS => "Forall-props",
            EqPropS => "Eq-props",
            FPow1 => "F-Pow",
            IPow1 => "I-Pow",
            EqPow1 => "eq-Pow",
            EffPow1 => "eff-Pow",
            EtaPow1 => "eta-Pow",
            FFc => "F-Fc",
            IFc => "I-Fc",
            EFc => "E-Fc",
            BetaFc => "beta-Fc",
            EtaFc => "eta-Fc",
            EqSigma => "eq-Sigma",
            EqFc => "eq-Fc",
            EqList => "eq-List",
            EqSigmaSet => "eq-Sigma-s",
            EqPlus => "eq-Plus",
            EqPi => "eq-Pi",
            EqQuot => "eq-Q",
            EqOr => "eq-Or",
            EqImp => "eq-Imp",
            EqAnd => "eq-And",
            EqEq => "eq-Eq",
            EqExists => "eq-Exists",
            EqForall => "eq-Forall",
            EqOrPropS => "eq-Or-props",
            EqImpPropS => "eq-Imp-props",
            EqAndPropS => "eq-And-props",
            EqEqPropS => "eq-Eq-props",
            EqExistsPropS => "eq-Exists-props",
            EqForallPropS => "eq-Forall-props",
            PropIntoColEq => "prop-into-col-eq",
            PropSEq1 => "props-eq1",
            PropSEq2 => "props-eq2",
            PropSIntoPropEq => "props-into-prop-eq",
            PropSIntoSetEq => "props-into-set-eq",
            SetIntoColEq => "set-into-col-eq",
            IEqSigma => "I-eq-Sigma",
            EEqSigma => "E-eq-Sigma",
            EEqN0 => "E-eq-N0",
            EEqN1 => "E-eq-N1",
            I2EqList => "I2-eq-List",
            EEqList => "E-eq-List",
            IEqQuot => "I-eq-Q",
            EEqQuot => "E-eq-Q",
            I1EqPlus => "I1-eq-Plus",
            I2EqPlus => "I2-eq-Plus",
            EEqPlus => "E-eq-Plus",
            IEqPi => "I-eq-Pi",
            EEqPi => "E-eq-Pi",
            IEqFc => "I-eq-Fc",
            EEqFc => "E-eq-Fc",
            FPiCol => "F-Pi-c",
            IPiCol => "I-Pi-c",
            EPiCol => "E-Pi-c",
            BetaPiCol => "beta-Pi-c",
            EtaPiCol => "eta-Pi-c",
            QuotCol => "Q-c",
            IQuotCol => "I-Q-c",
            QClassEqCol => "eq-Q-c-class",
            EQuotCol => "E-Q-c",
            CQuotCol => "C-Q-c",
            EffCol => "eff-c",
            EqPiCol => "eq-Pi-c",
            IEqPiCol => "I-eq-Pi-c",
            EEqPiCol => "E-eq-Pi-c",
            EqQuotCol => "eq-Q-c",
            IEqQuotCol => "I-eq-Q-c",
            EEqQuotCol => "E-eq-Q-c",
        }
    }

    pub fn from_name(s: &str) -> Option<RuleId> {
        RuleId::ALL.iter().copied().find(|r| r.name() == s)
    }

    /// Rules available only with dependent product collections (emTT-dp).
    pub fn requires_dp(self) -> bool {
        use RuleId::*;
        matches!(
            self,
            FPiCol
                | IPiCol
                | EPiCol
                | BetaPiCol
                | EtaPiCol
                | QuotCol
                | IQuotCol
                | QClassEqCol
                | EQuotCol
                | CQuotCol
                | EffCol
                | EqPiCol
                | IEqPiCol
                | EEqPiCol
                | EqQuotCol
                | IEqQuotCol
                | EEqQuotCol
        )
    }

    pub const ALL: [RuleId; 148] = {
        use RuleId::*;
        [
            ContEmpty, ContExt, Var, SetIntoCol, PropIntoCol, PropSIntoSet, PropSIntoProp,
            RefTy, SymTy, TraTy, SubT, RefTm, SymTm, TraTm, Sub, Conv, ConvEq, FSigma, ISigma,
            ESigma, CSigma, FN0, EN0, FN1, IN1, CN1, FSigmaSet, FList, I1List, I2List, EList,
            C1List, C2List, FPlus, I1Plus, I2Plus, EPlus, C1Plus, C2Plus, FPi, IPi, EPi, BetaPi,
            EtaPi, FQuot, IQuot, QClassEq, EQuot, CQuot, Eff, PropMono, PropTrue, FBot, EBot,
            FEq, IEq, EEq, FImp, IImp, EImp, FAnd, IAnd, E1And, E2And, FOr, I1Or, I2Or, EOr,
            FExists, IExists, EExists, FForall, IForall, EForall, BotPropS, OrPropS, ImpPropS,
            AndPropS, ExistsPropS, ForallPropS, EqPropS, FPow1, IPow1, EqPow1, EffPow1, EtaPow1,
            FFc, IFc, EFc, BetaFc, EtaFc, EqSigma, EqFc, EqList, EqSigmaSet, EqPlus, EqPi,
            EqQuot, EqOr, EqImp, EqAnd, EqEq, EqExists, EqForall, EqOrPropS, EqImpPropS,
            EqAndPropS, EqEqPropS, EqExistsPropS, EqForallPropS, PropIntoColEq, PropSEq1,
            PropSEq2, PropSIntoPropEq, PropSIntoSetEq, SetIntoColEq, IEqSigma, EEqSigma, EEqN0,
            EEqN1, I2EqList, EEqList, IEqQuot, EEqQuot, I1EqPlus, I2EqPlus, EEqPlus, IEqPi,
            EEqPi, IEqFc, EEqFc, FPiCol, IPiCol, EPiCol, BetaPiCol, EtaPiCol, QuotCol, IQuotCol,
            QClassEqCol, EQuotCol, CQuotCol, EffCol, EqPiCol, IEqPiCol, EEqPiCol, EqQuotCol,
            IEqQuotCol, EEqQuotCol,
        ]
    };
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
