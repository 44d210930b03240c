//! Named parameter storage shared by every network in a model.
//!
//! All trainable tensors live in one [`ParamStore`]; layers hold
//! [`ParamId`] handles instead of owning their weights. Weight tying then
//! falls out of the representation: two layers referencing the same
//! `ParamId` read and update a single tensor, so the tied core can never
//! drift apart between the two generator directions.

use crate::autodiff::{Graph, NodeId, Tensor};
use crate::error::{MaganError, Result};

/// Handle to one tensor in a [`ParamStore`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamId(pub(crate) usize);

impl ParamId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Flat list of named parameter tensors.
#[derive(Debug, Clone, Default)]
pub struct ParamStore {
    tensors: Vec<Tensor>,
    names: Vec<String>,
}

impl ParamStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: impl Into<String>, tensor: Tensor) -> ParamId {
        let id = ParamId(self.tensors.len());
        self.tensors.push(tensor);
        self.names.push(name.into());
        id
    }

    pub fn len(&self) -> usize {
        self.tensors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tensors.is_empty()
    }

    pub fn get(&self, id: ParamId) -> &Tensor {
        &self.tensors[id.0]
    }

    pub fn get_mut(&mut self, id: ParamId) -> &mut Tensor {
        &mut self.tensors[id.0]
    }

    pub fn name(&self, id: ParamId) -> &str {
        &self.names[id.0]
    }

    pub fn ids(&self) -> impl Iterator<Item = ParamId> + '_ {
        (0..self.tensors.len()).map(ParamId)
    }

    pub fn id_of(&self, name: &str) -> Option<ParamId> {
        self.names.iter().position(|n| n == name).map(ParamId)
    }

    /// Clones the tensors behind `ids`, in order.
    pub fn snapshot(&self, ids: &[ParamId]) -> Vec<Tensor> {
        ids.iter().map(|&id| self.tensors[id.0].clone()).collect()
    }

    /// Total number of scalar parameters behind `ids`.
    pub fn element_count(&self, ids: &[ParamId]) -> usize {
        ids.iter().map(|&id| self.tensors[id.0].len()).sum()
    }

    /// Mutable references to a disjoint set of parameters.
    pub fn get_many_mut(&mut self, ids: &[ParamId]) -> Result<Vec<&mut Tensor>> {
        let mut seen = vec![false; self.tensors.len()];
        for &id in ids {
            if id.0 >= self.tensors.len() || seen[id.0] {
                return Err(MaganError::Contract(format!(
                    "get_many_mut: invalid or duplicate param id {}",
                    id.0
                )));
            }
            seen[id.0] = true;
        }
        // Split the backing slice into disjoint &mut by walking it once.
        let mut out: Vec<Option<&mut Tensor>> = Vec::with_capacity(self.tensors.len());
        for t in self.tensors.iter_mut() {
            out.push(Some(t));
        }
        let mut picked = Vec::with_capacity(ids.len());
        for &id in ids {
            picked.push(out[id.0].take().expect("checked disjoint above"));
        }
        Ok(picked)
    }
}

/// Mapping from parameters to the graph nodes they were inserted as for
/// one forward/backward pass.
#[derive(Debug)]
pub struct Binding {
    nodes: Vec<Option<NodeId>>,
    trainable: Vec<ParamId>,
}

impl Binding {
    /// Inserts every parameter of `store` into `graph`: the ids listed in
    /// `trainable` as gradient-carrying leaves, everything else as
    /// constants. Each parameter is inserted exactly once no matter how
    /// many layers reference it.
    pub fn bind_all(graph: &mut Graph, store: &ParamStore, trainable: &[ParamId]) -> Binding {
        let mut nodes = vec![None; store.len()];
        let train_set: Vec<bool> = {
            let mut v = vec![false; store.len()];
            for &id in trainable {
                v[id.0] = true;
            }
            v
        };
        for id in store.ids() {
            let tensor = store.get(id).clone();
            let node = if train_set[id.0] {
                graph.param(tensor)
            } else {
                graph.constant(tensor)
            };
            nodes[id.0] = Some(node);
        }
        Binding {
            nodes,
            trainable: trainable.to_vec(),
        }
    }

    pub fn node(&self, id: ParamId) -> NodeId {
        self.nodes[id.0].expect("parameter bound by bind_all")
    }

    pub fn trainable(&self) -> &[ParamId] {
        &self.trainable
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_stable_and_named() {
        let mut store = ParamStore::new();
        let a = store.add("w1", Tensor::zeros(2, 2));
        let b = store.add("b1", Tensor::zeros(1, 2));
        assert_eq!(store.name(a), "w1");
        assert_eq!(store.name(b), "b1");
        assert_eq!(store.id_of("b1"), Some(b));
        assert_eq!(store.element_count(&[a, b]), 6);
    }

    #[test]
    fn get_many_mut_rejects_duplicates() {
        let mut store = ParamStore::new();
        let a = store.add("w", Tensor::zeros(1, 1));
        assert!(store.get_many_mut(&[a, a]).is_err());
    }

    #[test]
    fn bind_all_marks_only_requested_trainable() {
        let mut store = ParamStore::new();
        let a = store.add("w", Tensor::scalar(2.0));
        let b = store.add("c", Tensor::scalar(3.0));
        let mut g = Graph::new();
        let binding = Binding::bind_all(&mut g, &store, &[a]);
        let prod = g.mul(binding.node(a), binding.node(b)).unwrap();
        let loss = g.mean_all(prod);
        let grads = g.backward(loss).unwrap();
        assert!(grads.get(binding.node(a)).is_some());
        assert!(grads.get(binding.node(b)).is_none());
    }
}
