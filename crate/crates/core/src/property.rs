//! Hereditary graph properties given by a membership predicate and,
//! optionally, a finite list of minimal forbidden induced subgraphs.

use std::fmt;
use std::sync::Arc;

use crate::cluster::cluster_decomposition;
use crate::error::{Error, Result};
use crate::exclusive::ramsey_upper_bound;
use crate::graph::Graph;
use crate::pattern::PatternGraph;

pub type Membership = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

/// A hereditary property. Predicates must be pure.
///
/// When both `membership` and `forbidden` are present the predicate is the
/// authority; solvers that branch on the list re-check their answers with it.
#[derive(Clone)]
pub struct PropertySpec {
    pub name: String,
    pub membership: Membership,
    pub forbidden: Option<Vec<PatternGraph>>,
    /// Order of an edgeless graph the property excludes.
    pub excluded_edgeless_order: Option<usize>,
    /// Order of a complete graph the property excludes.
    pub excluded_clique_order: Option<usize>,
    /// Set for "cluster graph with at most k clusters".
    pub cluster_bound: Option<usize>,
}

impl fmt::Debug for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropertySpec")
            .field("name", &self.name)
            .field("forbidden", &self.forbidden.as_ref().map(Vec::len))
            .field("excluded_edgeless_order", &self.excluded_edgeless_order)
            .field("excluded_clique_order", &self.excluded_clique_order)
            .field("cluster_bound", &self.cluster_bound)
            .finish()
    }
}

impl PropertySpec {
    pub fn contains(&self, g: &Graph) -> bool {
        (self.membership)(g)
    }

    /// Membership of `G[subset]`.
    pub fn contains_induced(&self, g: &Graph, subset: &[usize]) -> bool {
        self.contains(&g.induced_subgraph(subset))
    }

    fn build(name: impl Into<String>, membership: impl Fn(&Graph) -> bool + Send + Sync + 'static) -> Self {
        PropertySpec {
            name: name.into(),
            membership: Arc::new(membership),
            forbidden: None,
            excluded_edgeless_order: None,
            excluded_clique_order: None,
            cluster_bound: None,
        }
    }

    pub fn edgeless() -> Self {
        PropertySpec {
            forbidden: Some(vec![PatternGraph::complete(2)]),
            excluded_clique_order: Some(2),
            ..Self::build("edgeless", |g| g.m() == 0)
        }
    }

    pub fn clique() -> Self {
        PropertySpec {
            forbidden: Some(vec![PatternGraph::edgeless(2)]),
            excluded_edgeless_order: Some(2),
            ..Self::build("clique", |g| 2 * g.m() == g.n() * g.n().saturating_sub(1))
        }
    }

    /// Cluster graphs, with at most `k` clusters when `k` is given.
    pub fn cluster(k: Option<usize>) -> Self {
        let mut forbidden = vec![PatternGraph::path(3)];
        let name = match k {
            Some(k) => {
                if k < crate::pattern::MAX_PATTERN_ORDER {
                    forbidden.push(PatternGraph::edgeless(k + 1));
                }
                format!("cluster:k={k}")
            }
            None => "cluster".to_string(),
        };
        let forbidden = match k {
            Some(k) if k + 1 > crate::pattern::MAX_PATTERN_ORDER => None,
            _ => Some(forbidden),
        };
        PropertySpec {
            forbidden,
            excluded_edgeless_order: k.map(|k| k + 1),
            cluster_bound: k,
            ..Self::build(name, move |g| cluster_count(g).is_some_and(|c| k.is_none_or(|k| c <= k)))
        }
    }

    /// Complements of cluster graphs, with at most `k` co-clusters when given.
    pub fn co_cluster(k: Option<usize>) -> Self {
        let mut forbidden = vec![PatternGraph::path(3).complement()];
        let name = match k {
            Some(k) => {
                forbidden.push(PatternGraph::complete(k + 1));
                format!("co-cluster:k={k}")
            }
            None => "co-cluster".to_string(),
        };
        let forbidden = match k {
            Some(k) if k + 1 > crate::pattern::MAX_PATTERN_ORDER => None,
            _ => Some(forbidden),
        };
        PropertySpec {
            forbidden,
            excluded_clique_order: k.map(|k| k + 1),
            ..Self::build(name, move |g| cluster_count(&g.complement()).is_some_and(|c| k.is_none_or(|k| c <= k)))
        }
    }

    pub fn triangle_free() -> Self {
        PropertySpec {
            forbidden: Some(vec![PatternGraph::complete(3)]),
            excluded_clique_order: Some(3),
            ..Self::build("triangle-free", |g| !has_triangle(g))
        }
    }

    pub fn any() -> Self {
        PropertySpec { forbidden: Some(Vec::new()), ..Self::build("any", |_| true) }
    }

    /// Graphs on at most `q` vertices.
    pub fn max_order(q: usize) -> Self {
        // Every labelled graph on q + 1 vertices; only listed while that stays small.
        let forbidden = (q < 4).then(|| {
            let pairs: Vec<(usize, usize)> = (0..=q).flat_map(|u| (u + 1..=q).map(move |w| (u, w))).collect();
            (0u32..1 << pairs.len())
                .map(|mask| {
                    let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                    PatternGraph::new(q + 1, &edges)
                })
                .collect()
        });
        PropertySpec {
            forbidden,
            excluded_edgeless_order: Some(q + 1),
            excluded_clique_order: Some(q + 1),
            ..Self::build(format!("order:q={q}"), move |g| g.n() <= q)
        }
    }

    /// Looks up a library property such as `edgeless`, `clique`,
    /// `cluster:k=3`, `co-cluster`, `triangle-free`, `any` or `order:q=4`.
    pub fn parse(text: &str) -> Result<Self> {
        let (head, arg) = match text.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (text, None),
        };
        let num = |key: &str| -> Result<Option<usize>> {
            match arg {
                None => Ok(None),
                Some(a) => {
                    let v = a
                        .strip_prefix(key)
                        .and_then(|r| r.strip_prefix('='))
                        .ok_or_else(|| Error::Config(format!("expected {key}=<int> in {text:?}")))?;
                    v.parse().map(Some).map_err(|_| Error::Config(format!("bad integer in {text:?}")))
                }
            }
        };
        let no_arg = |spec: PropertySpec| match arg {
            None => Ok(spec),
            Some(_) => Err(Error::Config(format!("property {head} takes no argument"))),
        };
        match head {
            "edgeless" | "independent" => no_arg(Self::edgeless()),
            "clique" | "complete" => no_arg(Self::clique()),
            "cluster" => Ok(Self::cluster(num("k")?)),
            "co-cluster" | "complete-multipartite" => Ok(Self::co_cluster(num("k")?)),
            "triangle-free" => no_arg(Self::triangle_free()),
            "any" => no_arg(Self::any()),
            "order" => {
                let q = num("q")?.ok_or_else(|| Error::Config("order needs q=<int>".into()))?;
                Ok(Self::max_order(q))
            }
            _ => Err(Error::Config(format!("unknown property {text:?}"))),
        }
    }
}

/// Mutual exclusivity order from the Ramsey bound, when one property
/// excludes an edgeless graph and the other a clique.
pub fn exclusivity_bound(a: &PropertySpec, b: &PropertySpec) -> Result<Option<u64>> {
    let mut best: Option<u64> = None;
    let pairs = [
        (a.excluded_edgeless_order, b.excluded_clique_order),
        (b.excluded_edgeless_order, a.excluded_clique_order),
    ];
    for (s_edgeless, s_clique) in pairs {
        if let (Some(r), Some(s)) = (s_edgeless, s_clique) {
            let d = ramsey_upper_bound(r as u64, s as u64)?;
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    Ok(best)
}

fn cluster_count(g: &Graph) -> Option<usize> {
    let all: Vec<usize> = (0..g.n()).collect();
    cluster_decomposition(g, &all).ok().map(|c| c.len())
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    })
}
