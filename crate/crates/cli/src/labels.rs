use adelink::plumbing::DynkinLabel;

/// Groups positional tokens into labels: `A 5`, `A5`, `E 6` and `E6` all work,
/// so `link A 2 E8 D 3` names three singularities.
pub fn parse_labels(tokens: &[String]) -> Result<Vec<DynkinLabel>, String> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let t = tokens[i].trim();
        let text = if t.len() == 1 && t.chars().all(|c| c.is_ascii_alphabetic()) {
            let Some(next) = tokens.get(i + 1) else {
                return Err(format!("label {t:?} is missing its parameter"));
            };
            i += 2;
            format!("{t} {next}")
        } else {
            i += 1;
            t.to_string()
        };
        out.push(text.parse::<DynkinLabel>().map_err(|e| e.to_string())?);
    }
    if out.is_empty() {
        return Err("no label given".into());
    }
    Ok(out)
}
