use std::borrow::Cow;
use std::collections::HashMap;

use crate::graph::Vertex;

/// Bijection between external vertex labels and dense ids `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap(Repr);

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// Labels `"1"..="n"`, stored implicitly.
    OneBased(usize),
    Interned {
        labels: Vec<String>,
        ids: HashMap<String, Vertex>,
    },
}

impl Default for LabelMap {
    fn default() -> Self {
        LabelMap(Repr::Interned {
            labels: Vec::new(),
            ids: HashMap::new(),
        })
    }
}

impl LabelMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `"1"..="n"` for ids `0..n`, as used by DIMACS files.
    pub fn one_based(n: usize) -> Self {
        LabelMap(Repr::OneBased(n))
    }

    /// Returns the id of `label`, assigning the next free id on first sight.
    pub fn intern(&mut self, label: &str) -> Vertex {
        if let Repr::OneBased(n) = self.0 {
            let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let ids = labels.iter().cloned().zip(0..).collect();
            self.0 = Repr::Interned { labels, ids };
        }
        let Repr::Interned { labels, ids } = &mut self.0 else {
            unreachable!()
        };
        if let Some(&id) = ids.get(label) {
            return id;
        }
        let id = labels.len();
        labels.push(label.to_owned());
        ids.insert(label.to_owned(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<Vertex> {
        match &self.0 {
            Repr::OneBased(n) => match label.parse::<usize>() {
                Ok(i) if (1..=*n).contains(&i) && i.to_string() == label => Some(i - 1),
                _ => None,
            },
            Repr::Interned { ids, .. } => ids.get(label).copied(),
        }
    }

    pub fn label(&self, id: Vertex) -> Cow<'_, str> {
        match &self.0 {
            Repr::OneBased(n) => {
                assert!(id < *n, "id {id} out of range");
                Cow::Owned((id + 1).to_string())
            }
            Repr::Interned { labels, .. } => Cow::Borrowed(&labels[id]),
        }
    }

    pub fn len(&self) -> usize {
        match &self.0 {
            Repr::OneBased(n) => *n,
            Repr::Interned { labels, .. } => labels.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
