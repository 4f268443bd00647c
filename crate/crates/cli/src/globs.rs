//! Shell-style id matching for `--only` and `list` filters: `*` matches
//! any run of characters, `?` exactly one, everything else literally.

pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut pi, mut ti) = (0usize, 0usize);
    let mut star: Option<(usize, usize)> = None;
    while ti < t.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = Some((pi, ti));
            pi += 1;
        } else if let Some((sp, st)) = star {
            // Backtrack: let the last star swallow one more character.
            pi = sp + 1;
            ti = st + 1;
            star = Some((sp, st + 1));
        } else {
            return false;
        }
    }
    while pi < p.len() && p[pi] == '*' {
        pi += 1;
    }
    pi == p.len()
}

pub fn matches_any(patterns: &[String], text: &str) -> bool {
    patterns.iter().any(|p| glob_match(p, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wildcards_behave_like_a_shell() {
        assert!(glob_match("THM-*", "THM-SS"));
        assert!(glob_match("*", "anything"));
        assert!(glob_match("*-INF", "GP-SS-INF"));
        assert!(glob_match("DEG-??", "DEG-SS"));
        assert!(!glob_match("DEG-??", "DEG-SS1"));
        assert!(!glob_match("THM-*", "FE-3"));
        assert!(glob_match("CC-COSCOS", "CC-COSCOS"));
        assert!(!glob_match("", "x"));
        assert!(glob_match("**", "x"));
    }
}
