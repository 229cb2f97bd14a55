use mckay_quiver::*;

fn main() {
    let mut texts: Vec<String> = Vec::new();
    for i in [3usize, 5, 7, 9, 15] {
        for k in 2..=6usize {
            texts.push(format!("a^2 = b^2; a^{i} = 1; (ab)^{k} = 1"));
            texts.push(format!("a^2 = b^2; (ab)^{i} = 1; a^{k} = b"));
            texts.push(format!("a^2 = b^2; a^{i} = b; (ab)^{k} = 1"));
            texts.push(format!("a^2 = b^2; a^{i} = ba; (ab)^{k} = 1"));
            texts.push(format!("a^2 = b^2; a^{k} b a^{i} = 1; (ab)^4 = 1"));
        }
    }
    let mut found = 0;
    for text in texts {
        let Ok(p) = parse_presentation(&text) else { continue };
        let Ok(g) = enumerate_group(&p, 20_000) else { continue };
        if g.order() > 200 {
            continue;
        }
        let Ok(pair) = validate_generators(g) else { continue };
        let grid = toroidal_grid(&pair);
        let period = pair.period();
        let one = pair.group().identity();
        let mut odd = Vec::new();
        for r in 0..period {
            for c in 0..period {
                if grid.labels[r][c] == one && (r + c) % 2 == 1 {
                    odd.push((r, c));
                }
            }
        }
        if !odd.is_empty() {
            found += 1;
            println!(
                "ODD: {text} | order={} m={} odd occurrences: {:?}",
                pair.group().order(),
                pair.m(),
                odd
            );
        }
    }
    println!("presentations with odd identity occurrences: {found}");
}
