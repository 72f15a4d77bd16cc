use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

/// An interned variable name.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

#[derive(Default)]
struct Interner {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(Default::default)
}

impl Var {
    pub fn new(name: &str) -> Var {
        if let Some(&id) = interner().read().unwrap().ids.get(name) {
            return Var(id);
        }
        let mut w = interner().write().unwrap();
        if let Some(&id) = w.ids.get(name) {
            return Var(id);
        }
        let id = w.names.len() as u32;
        w.names.push(name.to_string());
        w.ids.insert(name.to_string(), id);
        Var(id)
    }

    /// `Var::indexed("l", 2)` is `l2`.
    pub fn indexed(prefix: &str, i: usize) -> Var {
        Var::new(&format!("{prefix}{i}"))
    }

    pub fn name(self) -> String {
        interner().read().unwrap().names[self.0 as usize].clone()
    }

    /// Natural order on names: alphabetic prefix, then numeric suffix.
    pub fn name_cmp(self, other: Var) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (a, b) = (self.name(), other.name());
        name_key(&a).cmp(&name_key(&b))
    }
}

fn name_key(s: &str) -> (&str, u64, &str) {
    let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    let (prefix, rest) = s.split_at(split);
    let digits = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let n = rest[..digits].parse().unwrap_or(0);
    (prefix, n, &rest[digits..])
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        assert_eq!(Var::new("l1"), Var::indexed("l", 1));
        assert_eq!(Var::new("m3").name(), "m3");
    }

    #[test]
    fn natural_name_order() {
        assert_eq!(Var::new("l2").name_cmp(Var::new("l10")), Ordering::Less);
        assert_eq!(Var::new("l9").name_cmp(Var::new("m1")), Ordering::Less);
        assert_eq!(Var::new("t").name_cmp(Var::new("l1")), Ordering::Greater);
    }
}
