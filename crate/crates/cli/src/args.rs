use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fincat_core::config::DEFAULT_SEED;

/// Exhaustive checks and constructions over finite categories.
#[derive(Debug, Parser)]
#[command(name = "fincat", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Specification document to load.
    #[arg(short, long, global = true, value_name = "FILE")]
    pub spec: Option<PathBuf>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Enumeration budget for arrows and cones.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<usize>,
    /// Seed for randomized search, echoed in the report.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

/// Categories are named by a document declaration or one of the built-ins
/// `terminal`, `chain:N`, `discrete:N`, `finsets:a,b,...`. Objects and
/// arrows are named by label or by index (`o3`, `a7`). Finite sets are
/// document names or sizes.
#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check every category law.
    Validate { category: String },
    /// Check a property of an arrow, functor or transformation.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Find a limit of a diagram.
    Limit { diagram: String },
    /// Find a colimit of a diagram.
    Colimit { diagram: String },
    /// Constructions in the category of finite sets.
    #[command(subcommand)]
    Finset(FinsetCmd),
    /// Build the slice over an object.
    Slice { category: String, object: String },
    /// Build the arrow category.
    Arrowcat { category: String },
    /// Topos axioms and classification.
    #[command(subcommand)]
    Topos(ToposCmd),
    /// Build the full subcategory of finite sets on the given sizes.
    Fullsubcat {
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum CheckCmd {
    /// Whether an arrow is monic.
    Monic { category: String, arrow: String },
    /// Whether an arrow is epic.
    Epic { category: String, arrow: String },
    /// Whether an arrow has an inverse.
    Iso { category: String, arrow: String },
    /// Check the functor laws.
    Functor { functor: String },
    /// Check typing and naturality of a transformation.
    Nattrans { transformation: String },
    /// Whether LEFT is left adjoint to RIGHT.
    Adjunction {
        left: String,
        right: String,
        #[arg(long, requires = "counit")]
        unit: Option<String>,
        #[arg(long, requires = "unit")]
        counit: Option<String>,
    },
    /// Whether a functor sends a limit of the diagram to a limit.
    PreservesLimit { functor: String, diagram: String },
}

#[derive(Debug, Clone, Subcommand)]
pub enum FinsetCmd {
    /// Product with its projections.
    Product { a: String, b: String },
    /// Coproduct with its injections.
    Coproduct { a: String, b: String },
    /// Equalizer of two parallel maps.
    Equalizer { f: String, g: String },
    /// Coequalizer of two parallel maps.
    Coequalizer { f: String, g: String },
    /// Pullback of a cospan.
    Pullback { f: String, g: String },
    /// Pushout of a span.
    Pushout { f: String, g: String },
    /// `B^A` with its evaluation arrow.
    Exp { a: String, b: String },
    /// Curry `f : A × C → B`; the domain is read as `A × C` in row-major order.
    Curry { map: String, a: String },
    /// The element of `B^A` naming a map.
    Name { map: String },
    /// The points `1 → S` of a set.
    Members { set: String },
    /// The subobject classifier and its truth values.
    Classifier,
    /// Characteristic arrow of an injective map.
    Char { map: String },
    /// Pull the subobject given by an injective map back along another map.
    Invimage { map: String, sub: String },
    /// Subobjects of a set with their complements.
    Subalg { set: String },
    /// The power object of a set.
    Power { set: String },
}

#[derive(Debug, Clone, Subcommand)]
pub enum ToposCmd {
    /// Check the topos axioms.
    Check { category: String },
    /// Which kinds of topos the category is.
    Kinds { category: String },
}

impl Command {
    /// The command line as typed, minus global options.
    pub fn describe(&self) -> String {
        let words: Vec<String> = match self {
            Command::Validate { category } => vec!["validate".into(), category.clone()],
            Command::Check(c) => {
                let mut w = vec!["check".to_string()];
                w.extend(match c {
                    CheckCmd::Monic { category, arrow } => vec!["monic".into(), category.clone(), arrow.clone()],
                    CheckCmd::Epic { category, arrow } => vec!["epic".into(), category.clone(), arrow.clone()],
                    CheckCmd::Iso { category, arrow } => vec!["iso".into(), category.clone(), arrow.clone()],
                    CheckCmd::Functor { functor } => vec!["functor".into(), functor.clone()],
                    CheckCmd::Nattrans { transformation } => vec!["nattrans".into(), transformation.clone()],
                    CheckCmd::Adjunction { left, right, .. } => vec!["adjunction".into(), left.clone(), right.clone()],
                    CheckCmd::PreservesLimit { functor, diagram } => {
                        vec!["preserves-limit".into(), functor.clone(), diagram.clone()]
                    }
                });
                w
            }
            Command::Limit { diagram } => vec!["limit".into(), diagram.clone()],
            Command::Colimit { diagram } => vec!["colimit".into(), diagram.clone()],
            Command::Finset(f) => {
                let mut w = vec!["finset".to_string()];
                w.extend(match f {
                    FinsetCmd::Product { a, b } => vec!["product".into(), a.clone(), b.clone()],
                    FinsetCmd::Coproduct { a, b } => vec!["coproduct".into(), a.clone(), b.clone()],
                    FinsetCmd::Equalizer { f, g } => vec!["equalizer".into(), f.clone(), g.clone()],
                    FinsetCmd::Coequalizer { f, g } => vec!["coequalizer".into(), f.clone(), g.clone()],
                    FinsetCmd::Pullback { f, g } => vec!["pullback".into(), f.clone(), g.clone()],
                    FinsetCmd::Pushout { f, g } => vec!["pushout".into(), f.clone(), g.clone()],
                    FinsetCmd::Exp { a, b } => vec!["exp".into(), a.clone(), b.clone()],
                    FinsetCmd::Curry { map, a } => vec!["curry".into(), map.clone(), a.clone()],
                    FinsetCmd::Name { map } => vec!["name".into(), map.clone()],
                    FinsetCmd::Members { set } => vec!["members".into(), set.clone()],
                    FinsetCmd::Classifier => vec!["classifier".into()],
                    FinsetCmd::Char { map } => vec!["char".into(), map.clone()],
                    FinsetCmd::Invimage { map, sub } => vec!["invimage".into(), map.clone(), sub.clone()],
                    FinsetCmd::Subalg { set } => vec!["subalg".into(), set.clone()],
                    FinsetCmd::Power { set } => vec!["power".into(), set.clone()],
                });
                w
            }
            Command::Slice { category, object } => vec!["slice".into(), category.clone(), object.clone()],
            Command::Arrowcat { category } => vec!["arrowcat".into(), category.clone()],
            Command::Topos(ToposCmd::Check { category }) => vec!["topos".into(), "check".into(), category.clone()],
            Command::Topos(ToposCmd::Kinds { category }) => vec!["topos".into(), "kinds".into(), category.clone()],
            Command::Fullsubcat { sizes } => {
                let mut w = vec!["fullsubcat".to_string()];
                w.extend(sizes.iter().map(|s| s.to_string()));
                w
            }
        };
        words.join(" ")
    }
}
