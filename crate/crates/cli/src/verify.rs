use std::path::Path;

use powergraph_core::catalog::{load_cayley_file, CatalogSource, CatalogSpec};
use powergraph_core::verify::{cyclic_reference, render_text, verify_group, VerificationReport};
use powergraph_core::build_power_graph;
use rayon::prelude::*;

use crate::{Failure, Outcome, VerifyArgs};

pub fn run(args: &VerifyArgs) -> Outcome {
    let source = if args.complete {
        CatalogSource::Complete
    } else if args.families || args.files.is_empty() {
        CatalogSource::Families
    } else {
        CatalogSource::Cyclic
    };
    let spec = CatalogSpec::new(args.n, source).with_files(args.files.iter().cloned());
    let errors = spec.file_errors();
    if !errors.is_empty() {
        let listing: Vec<String> = errors.iter().map(|e| format!("  {e}")).collect();
        return Err(Failure(format!(
            "{} Cayley file(s) rejected:\n{}",
            errors.len(),
            listing.join("\n")
        )));
    }
    let catalog = spec.resolve()?;
    let cyclic = cyclic_reference(args.n)?;
    // order-preserving parallel map
    let entries = catalog
        .entries
        .par_iter()
        .map(|e| verify_group(&e.descriptor, &e.group, cyclic))
        .collect();
    let report = VerificationReport::assemble(args.n, cyclic, entries)?;

    let text = render_text(&report);
    print!("{text}");
    if let Some(path) = &args.text {
        write(path, &text)?;
    }
    if let Some(path) = &args.json {
        let mut json = serde_json::to_string_pretty(&report)?;
        json.push('\n');
        write(path, &json)?;
    }
    Ok(report.suite_pass)
}

pub fn edges(file: &Path) -> Outcome {
    let group = load_cayley_file(file)?;
    print!("{}", build_power_graph(&group).edge_list());
    Ok(true)
}

pub fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure(format!("{}: {e}", path.display())))
}
