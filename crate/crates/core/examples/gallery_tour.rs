//! Every closed-form map: strip-realized ones against the strip engine, the rest by their laws.
use latticemaps::cli::{gallery_default, run};
use latticemaps::gallery::gallery_list;

fn main() -> latticemaps::Result<()> {
    for e in gallery_list() {
        let out = run(&gallery_default(e.id))?;
        println!("{:11} dim {} params [{}]  {}", e.id.as_str(), e.dim, e.params.join(", "), out.summary);
    }
    Ok(())
}
