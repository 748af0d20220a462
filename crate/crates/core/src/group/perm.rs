use super::GroupError;

/// Permutation of the points `0..degree`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    /// Build from 1-based cycles such as `[[1, 2, 3], [4, 5]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(GroupError::Parse {
                        line: 0,
                        msg: format!("point {p} outside 1..={degree}"),
                    });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(GroupError::Parse {
                        line: 0,
                        msg: format!("point {p} repeated in cycle notation"),
                    });
                }
                let next = cycle[(k + 1) % cycle.len()];
                img[p - 1] = next - 1;
            }
        }
        Ok(Permutation(img))
    }

    pub fn image(&self, point: usize) -> usize {
        self.0[point]
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }
}

/// Parse one line of cycle notation, e.g. `(1 2 3)(4 5)`. `()` is the identity.
pub fn parse_cycles(line: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(format!("expected `(` at `{rest}`"));
        };
        let end = body.find(')').ok_or_else(|| "unclosed cycle".to_string())?;
        let points = body[..end]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|e| format!("bad point `{s}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn render_cycles(cycles: &[Vec<usize>]) -> String {
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            format!("({})", pts.join(" "))
        })
        .collect()
}
