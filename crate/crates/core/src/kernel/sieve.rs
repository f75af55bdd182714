// SPDX-License-Identifier: Apache-2.0

/// The primes up to a fixed limit, by the Sieve of Eratosthenes.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    limit: u64,
    composite: Vec<bool>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        let len = limit as usize + 1;
        let mut composite = vec![false; len.max(2)];
        composite[0] = true;
        composite[1] = true;
        let mut p = 2usize;
        while p * p < len {
            if !composite[p] {
                for m in (p * p..len).step_by(p) {
                    composite[m] = true;
                }
            }
            p += 1;
        }
        Self { limit, composite }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Membership. Panics above the limit.
    pub fn contains(&self, m: u64) -> bool {
        assert!(m <= self.limit, "{m} is beyond the sieve limit {}", self.limit);
        !self.composite[m as usize]
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit).filter(move |&m| !self.composite[m as usize])
    }
}

pub fn primes_up_to(limit: u64) -> PrimeSieve {
    PrimeSieve::new(limit)
}
