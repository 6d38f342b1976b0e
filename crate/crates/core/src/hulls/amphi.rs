use crate::error::Result;
use crate::fincat::universal::{cones, Cone, Diagram};
use crate::fincat::{props, Arrow, ArrowId, BuildOptions, FiniteCategory, ObjId, DEFAULT_ARROW_BUDGET};

/// At least one arrow into `z` from every object, at most one out of `z` to
/// every object.
pub fn is_amphi_terminal(d: &FiniteCategory, z: ObjId) -> bool {
    d.objects().all(|x| !d.hom(x, z).is_empty() && d.hom(z, x).len() <= 1)
}

pub fn is_amphi_initial(d: &FiniteCategory, z: ObjId) -> bool {
    d.objects().all(|x| !d.hom(z, x).is_empty() && d.hom(x, z).len() <= 1)
}

/// Every amphi-terminal object, in id order.
pub fn amphi_terminal_objects(d: &FiniteCategory) -> Vec<ObjId> {
    d.objects().filter(|&z| is_amphi_terminal(d, z)).collect()
}

/// The lowest-id amphi-terminal object.
pub fn find_amphi_terminal(d: &FiniteCategory) -> Option<ObjId> {
    d.objects().find(|&z| is_amphi_terminal(d, z))
}

/// Any two amphi-terminal objects are joined by a unique arrow each way, and
/// those arrows are mutually inverse.
pub fn amphi_terminals_isomorphic(d: &FiniteCategory) -> bool {
    let all = amphi_terminal_objects(d);
    all.iter().all(|&a| {
        all.iter().all(|&b| match d.hom(a, b) {
            [f] => props::inverse(d, *f).is_some(),
            _ => false,
        })
    })
}

/// The category of cones over `diagram`, with the cone behind each object
/// and the apex arrow behind each morphism.
pub struct ConeCategory {
    pub category: FiniteCategory,
    pub cones: Vec<Cone>,
    pub arrows: Vec<ArrowId>,
}

pub fn cone_category(c: &FiniteCategory, diagram: &Diagram) -> Result<ConeCategory> {
    let mut all = Vec::new();
    for apex in c.objects() {
        all.extend(cones(c, diagram, apex).into_iter().map(|legs| Cone { apex, legs }));
    }
    let mut arrows = Vec::new();
    let mut under = Vec::new();
    let mut index = std::collections::HashMap::new();
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            for &u in c.hom(a.apex, b.apex) {
                if b.legs.iter().zip(&a.legs).all(|(&lb, &la)| c.compose(lb, u) == la) {
                    index.insert((i, j, u), arrows.len());
                    arrows.push(Arrow {
                        name: format!("{}:{i}->{j}", c.arrow_name(u)),
                        src: i,
                        tgt: j,
                    });
                    under.push(u);
                }
            }
        }
    }
    let identities = all
        .iter()
        .enumerate()
        .map(|(i, k)| index[&(i, i, c.identity(k.apex))])
        .collect();
    let category = FiniteCategory::from_table(
        (0..all.len()).map(|i| format!("cone{i}")).collect(),
        arrows.clone(),
        identities,
        |g, f| index.get(&(arrows[f].src, arrows[g].tgt, c.compose(under[g], under[f]))).copied(),
        BuildOptions::trusted(DEFAULT_ARROW_BUDGET),
    )?;
    Ok(ConeCategory {
        category,
        cones: all,
        arrows: under,
    })
}

/// An amphi-terminal object of the cone category, if any.
pub fn amphi_limit(c: &FiniteCategory, diagram: &Diagram) -> Result<Option<Cone>> {
    let cc = cone_category(c, diagram)?;
    Ok(find_amphi_terminal(&cc.category).map(|i| cc.cones[i].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::small::{cyclic_group, discrete, walking_arrow};

    #[test]
    fn terminal_object_is_amphi_terminal() {
        let c = walking_arrow();
        assert!(is_amphi_terminal(&c, 1));
        assert!(!is_amphi_terminal(&c, 0));
        assert!(is_amphi_initial(&c, 0));
    }

    #[test]
    fn zero_object_is_both() {
        let c = discrete(1);
        assert!(is_amphi_terminal(&c, 0));
        assert!(is_amphi_initial(&c, 0));
    }

    #[test]
    fn nontrivial_endomorphism_blocks_it() {
        let c = cyclic_group(2);
        assert!(!is_amphi_terminal(&c, 0));
        assert_eq!(find_amphi_terminal(&c), None);
    }

    #[test]
    fn empty_diagram_gives_the_ambient_object() {
        let c = walking_arrow();
        let cone = amphi_limit(&c, &Diagram::default()).unwrap().unwrap();
        assert_eq!(cone.apex, 1);
    }
}
