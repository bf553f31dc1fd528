use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use barymetric::Rational;

#[derive(Parser, Debug)]
#[command(name = "barymetric", version, about = "Exact barycentric triangle geometry")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Centroid, orthocenter, circumcenter, nine-point center, incenter,
    /// excenters and squared radii.
    Centers {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Squared distance between two points.
    Distance {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Named point (A B C G H O N I IA IB IC) or a triple `x,y,z`.
        p: String,
        q: String,
    },
    /// Oriented angle Q P R at P, as a cotangent.
    Angle {
        #[command(flatten)]
        shape: ShapeArgs,
        q: String,
        p: String,
        r: String,
    },
    /// Run the theorem catalog on one shape.
    Check {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Seed for the random probe points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a single catalog entry.
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Random shapes through the theorem catalog and the Cartesian oracle.
    Fuzz {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relative tolerance for oracle comparisons.
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
        /// Run trials on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["sides", "vertices"])))]
pub struct ShapeArgs {
    /// Side lengths a b c as integers or fractions `p/q`.
    #[arg(long, num_args = 3, allow_negative_numbers = true, value_names = ["A", "B", "C"], value_parser = parse_rational)]
    pub sides: Option<Vec<Rational>>,

    /// Cartesian vertices xA yA xB yB xC yC. Lossy: side lengths are rounded
    /// to the nearest fractions with denominator at most 10^6.
    #[arg(long, num_args = 6, allow_negative_numbers = true, value_names = ["XA", "YA", "XB", "YB", "XC", "YC"])]
    pub vertices: Option<Vec<f64>>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_must_be_positive() {
        assert_eq!(parse_tol("1e-9"), Ok(1e-9));
        assert!(parse_tol("0").is_err());
        assert!(parse_tol("-1").is_err());
        assert!(parse_tol("nan").is_err());
    }

    #[test]
    fn sides_parse_fractions() {
        let cli = Cli::try_parse_from(["barymetric", "centers", "--sides", "7/2", "3", "-1"]).unwrap();
        let Command::Centers { shape } = cli.command else { panic!("wrong command") };
        let sides = shape.sides.unwrap();
        assert_eq!(sides[0].to_string(), "7/2");
        assert_eq!(sides[2].to_string(), "-1");
    }

    #[test]
    fn shape_input_is_exclusive() {
        let both = ["barymetric", "centers", "--sides", "1", "1", "1", "--vertices", "0", "0", "1", "0", "0", "1"];
        assert!(Cli::try_parse_from(both).is_err());
        assert!(Cli::try_parse_from(["barymetric", "centers"]).is_err());
    }
}
