//! Degree, connectivity and universal-vertex facts checked over the whole
//! corpus.

use crate::graph::degree_bounds_hold;

use super::corpus::corpus_specs;
use super::support::{check, try_build};
use super::{TheoremCheck, VerifyOptions};

/// Over every constructible group: vertex degrees take only the values
/// |S| and |S|-1; the graph is connected iff S generates the group; a
/// universal vertex exists iff every non-identity element has prime order.
pub fn verify_proposition_basics(opts: &VerifyOptions) -> TheoremCheck {
    let c = check(
        "proposition-basics",
        "degrees lie in {|S|, |S|-1}; connected iff <S> = G; universal vertex iff every non-identity element has prime order",
    );
    let mut seen = 0usize;
    for spec in corpus_specs(opts.max_order) {
        let Some(b) = try_build(&spec, opts) else {
            continue;
        };
        seen += 1;
        let s_size = b.table.prime_order_set().len();
        if !degree_bounds_hold(&b.graph, s_size) {
            return c.fail_with(
                &b,
                format!("a vertex degree is outside {{{s_size}, {}}}", s_size.saturating_sub(1)),
                None,
            );
        }
        let generated = b.table.s_closure().len() == b.order();
        if b.graph.connected() != generated {
            return c.fail_with(
                &b,
                format!(
                    "connected = {}, but <S> covers {}/{} elements",
                    b.graph.connected(),
                    b.table.s_closure().len(),
                    b.order()
                ),
                None,
            );
        }
        let all_prime = s_size + 1 == b.order();
        if b.graph.has_universal_vertex() != all_prime {
            return c.fail_with(
                &b,
                format!(
                    "universal vertex = {}, all non-identity prime order = {all_prime}",
                    b.graph.has_universal_vertex()
                ),
                None,
            );
        }
    }
    if seen == 0 {
        return c.skipped("no corpus groups within the order bound");
    }
    c.pass()
}
