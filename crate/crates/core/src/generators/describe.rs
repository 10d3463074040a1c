//! Natural-language descriptions of generator classes and instances.
//!
//! Class descriptions summarize the formulation. Instance descriptions
//! append phrases derived deterministically from the instance's
//! structural statistics, quantized into small recurring vocabularies
//! (size, constraint/variable balance, matrix density, integrality mix)
//! plus the exact counts. Instances of one class at different scales
//! therefore share the formulation text while still differing in the
//! scale-dependent phrases.

use crate::instance::StructStats;

/// Fixed formulation text for a class; empty for unknown ids.
pub fn class_description(class_id: &str) -> String {
    let text = match class_id {
        "SC" => {
            "A set covering problem. Binary selection variables choose columns so that \
             every row is covered by at least one chosen column, using greater-or-equal \
             covering constraints with unit coefficients, and the objective minimizes \
             the total cost of the chosen columns."
        }
        "IS" => {
            "A maximum weight independent set problem on an undirected graph. Binary \
             variables select vertices, every edge contributes a pairwise conflict \
             constraint allowing at most one endpoint, and the objective maximizes the \
             total weight of the selected vertices."
        }
        "CA" => {
            "A combinatorial auction winner determination problem. Binary variables \
             accept bids on bundles of items, each item may be sold at most once, and \
             the objective maximizes the total revenue of the accepted bids."
        }
        "KS" => {
            "A multiple knapsack problem. Binary variables pack items into knapsacks, \
             each item is packed at most once, knapsack capacity constraints limit the \
             total weight per knapsack, and the objective maximizes packed profit."
        }
        "CFL" => {
            "A capacitated facility location problem. Binary variables open \
             facilities, continuous variables assign customer demand fractions to open \
             facilities, demand must be fully served, facility capacities limit the \
             served load, and the objective minimizes opening plus assignment costs."
        }
        "FCNF" => {
            "A fixed charge network flow problem on a directed acyclic graph. \
             Continuous variables route flow from a source to a sink subject to flow \
             conservation, binary variables activate arcs through capacity coupling \
             constraints, and the objective minimizes flow plus fixed activation costs."
        }
        "TSP" => {
            "A traveling salesman problem over cities in the plane. Binary variables \
             select directed tour arcs with exactly one arrival and one departure per \
             city, continuous ordering variables eliminate subtours through coupling \
             inequalities, and the objective minimizes total tour length."
        }
        "GA" => {
            "A generalized assignment problem. Binary variables give every task to \
             exactly one agent, per-agent capacity constraints limit the total \
             workload, and the objective minimizes total assignment cost."
        }
        _ => "",
    };
    text.to_string()
}

fn size_word(n_vars: f64) -> &'static str {
    match n_vars.log2() as i64 {
        i64::MIN..=5 => "tiny",
        6 => "very small",
        7 => "small",
        8 => "compact",
        9 => "medium",
        10 => "sizable",
        11 => "large",
        12 => "very large",
        _ => "huge",
    }
}

fn balance_phrase(n_vars: f64, n_cons: f64) -> &'static str {
    let r = (n_cons / n_vars).log2();
    if r < -1.5 {
        "far fewer constraints than variables"
    } else if r < -0.5 {
        "fewer constraints than variables"
    } else if r < 0.5 {
        "a balanced number of constraints and variables"
    } else if r < 1.5 {
        "more constraints than variables"
    } else {
        "far more constraints than variables"
    }
}

fn density_phrase(density: f64) -> &'static str {
    let d = density.log10();
    if d >= -1.0 {
        "a dense coefficient matrix"
    } else if d >= -1.5 {
        "a moderately dense coefficient matrix"
    } else if d >= -2.0 {
        "a sparse coefficient matrix"
    } else if d >= -2.5 {
        "a very sparse coefficient matrix"
    } else {
        "an extremely sparse coefficient matrix"
    }
}

fn integrality_phrase(s: &StructStats) -> &'static str {
    if s.frac_binary_vars >= 1.0 {
        "all decision variables are binary"
    } else if s.frac_integer_vars >= 1.0 {
        "all decision variables are integral"
    } else if s.frac_integer_vars >= 0.5 {
        "most variables are integral and the rest are continuous"
    } else if s.frac_integer_vars > 0.0 {
        "continuous variables dominate a smaller integral part"
    } else {
        "all variables are continuous"
    }
}

fn row_length_phrase(mean_cons_degree: f64) -> &'static str {
    match mean_cons_degree.log2() as i64 {
        i64::MIN..=1 => "very short constraint rows",
        2 => "short constraint rows",
        3 => "mid-length constraint rows",
        4 => "long constraint rows",
        _ => "very long constraint rows",
    }
}

/// Class description plus quantized and exact statistics of a concrete
/// instance.
pub fn instance_description(class_id: &str, stats: &StructStats) -> String {
    format!(
        "{} This is a {} instance with {}, {} and {} on average; {}. It has {} \
         variables and {} constraints with {} nonzero coefficients.",
        class_description(class_id),
        size_word(stats.n_vars),
        balance_phrase(stats.n_vars, stats.n_cons),
        density_phrase(stats.nnz_density),
        row_length_phrase(stats.mean_cons_degree),
        integrality_phrase(stats),
        stats.n_vars as u64,
        stats.n_cons as u64,
        (stats.nnz_density * stats.n_vars * stats.n_cons).round() as u64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_instance, GeneratorSpec};
    use crate::instance::instance_stats;

    #[test]
    fn every_class_has_a_description() {
        for id in ["SC", "IS", "CA", "KS", "CFL", "FCNF", "TSP", "GA"] {
            assert!(!class_description(id).is_empty());
        }
        assert!(class_description("NOPE").is_empty());
    }

    #[test]
    fn instance_description_is_deterministic_and_scale_aware() {
        let spec = GeneratorSpec::with_defaults("SC", 4).unwrap();
        let stats = instance_stats(&generate_instance(&spec).unwrap());
        let a = instance_description("SC", &stats);
        let b = instance_description("SC", &stats);
        assert_eq!(a, b);
        assert!(a.contains("set covering"));
        assert!(a.contains("1500 variables"));
    }
}
