use std::collections::BTreeMap;

use thiserror::Error;

use super::{ArrowId, FinCategory, ObjectId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("object map has {got} entries, source has {expected} objects")]
    ObjectMapLength { expected: usize, got: usize },
    #[error("arrow map has {got} entries, source has {expected} arrows")]
    ArrowMapLength { expected: usize, got: usize },
    #[error("image of `{0}` is out of range")]
    OutOfRange(String),
    #[error("image of `{0}` has the wrong endpoints")]
    EndpointMismatch(String),
    #[error("identity of `{0}` is not sent to an identity")]
    IdentityNotPreserved(String),
    #[error("composite `{g}` ∘ `{f}` is not preserved")]
    CompositionNotPreserved { g: String, f: String },
    #[error("unknown arrow `{0}` in functor map")]
    UnknownArrow(String),
    #[error("arrow `{0}` is not mapped")]
    Unmapped(String),
    #[error("functors are not composable")]
    NotComposable,
}

/// A functor between finite categories, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    source: FinCategory,
    target: FinCategory,
    object_map: Vec<ObjectId>,
    arrow_map: Vec<ArrowId>,
}

impl Functor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        object_map: Vec<ObjectId>,
        arrow_map: Vec<ArrowId>,
    ) -> Result<Self, FunctorError> {
        if object_map.len() != source.num_objects() {
            return Err(FunctorError::ObjectMapLength {
                expected: source.num_objects(),
                got: object_map.len(),
            });
        }
        if arrow_map.len() != source.num_arrows() {
            return Err(FunctorError::ArrowMapLength {
                expected: source.num_arrows(),
                got: arrow_map.len(),
            });
        }
        for (o, &image) in object_map.iter().enumerate() {
            if image >= target.num_objects() {
                return Err(FunctorError::OutOfRange(source.object_name(o).into()));
            }
        }
        for (a, &image) in arrow_map.iter().enumerate() {
            if image >= target.num_arrows() {
                return Err(FunctorError::OutOfRange(source.arrow_name(a).into()));
            }
            if target.src(image) != object_map[source.src(a)]
                || target.tgt(image) != object_map[source.tgt(a)]
            {
                return Err(FunctorError::EndpointMismatch(source.arrow_name(a).into()));
            }
        }
        for o in 0..source.num_objects() {
            if arrow_map[source.identity(o)] != target.identity(object_map[o]) {
                return Err(FunctorError::IdentityNotPreserved(source.object_name(o).into()));
            }
        }
        for (g, f) in source.composable_pairs() {
            let gf = source.compose(g, f).expect("composable");
            if target.compose(arrow_map[g], arrow_map[f]) != Some(arrow_map[gf]) {
                return Err(FunctorError::CompositionNotPreserved {
                    g: source.arrow_name(g).into(),
                    f: source.arrow_name(f).into(),
                });
            }
        }
        Ok(Functor {
            source,
            target,
            object_map,
            arrow_map,
        })
    }

    pub fn identity(c: &FinCategory) -> Self {
        Functor {
            source: c.clone(),
            target: c.clone(),
            object_map: (0..c.num_objects()).collect(),
            arrow_map: (0..c.num_arrows()).collect(),
        }
    }

    /// Builds a functor from an arrow-name map; objects follow identities.
    pub fn from_arrow_names(
        source: FinCategory,
        target: FinCategory,
        map: &BTreeMap<String, String>,
    ) -> Result<Self, FunctorError> {
        for k in map.keys() {
            if source.arrow_index(k).is_none() {
                return Err(FunctorError::UnknownArrow(k.clone()));
            }
        }
        let mut arrow_map = Vec::with_capacity(source.num_arrows());
        for a in source.arrows() {
            let image = map
                .get(&a.name)
                .ok_or_else(|| FunctorError::Unmapped(a.name.clone()))?;
            arrow_map.push(
                target
                    .arrow_index(image)
                    .ok_or_else(|| FunctorError::UnknownArrow(image.clone()))?,
            );
        }
        let object_map = (0..source.num_objects())
            .map(|o| target.src(arrow_map[source.identity(o)]))
            .collect();
        Functor::new(source, target, object_map, arrow_map)
    }

    /// The arrow-name map, the inverse of [`Functor::from_arrow_names`].
    pub fn to_arrow_names(&self) -> BTreeMap<String, String> {
        (0..self.source.num_arrows())
            .map(|a| {
                (
                    self.source.arrow_name(a).to_string(),
                    self.target.arrow_name(self.arrow_map[a]).to_string(),
                )
            })
            .collect()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Functor) -> Result<Functor, FunctorError> {
        if self.target != next.source {
            return Err(FunctorError::NotComposable);
        }
        Ok(Functor {
            source: self.source.clone(),
            target: next.target.clone(),
            object_map: self.object_map.iter().map(|&o| next.object_map[o]).collect(),
            arrow_map: self.arrow_map.iter().map(|&a| next.arrow_map[a]).collect(),
        })
    }

    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn target(&self) -> &FinCategory {
        &self.target
    }

    pub fn object_map(&self) -> &[ObjectId] {
        &self.object_map
    }

    pub fn arrow_map(&self) -> &[ArrowId] {
        &self.arrow_map
    }

    pub fn map_object(&self, o: ObjectId) -> ObjectId {
        self.object_map[o]
    }

    pub fn map_arrow(&self, a: ArrowId) -> ArrowId {
        self.arrow_map[a]
    }
}
