//! Screens every connected graph on six vertices for A-cospectral classes,
//! stores the fingerprints and regroups them from the store.

use ihara_sectors::screen::{group_fingerprints, load_store, parse_key, run_screen, InputSource, ScreenConfig};

fn main() {
    let store = std::env::temp_dir().join(format!("ihara-census-{}.jsonl", std::process::id()));
    let _ = std::fs::remove_file(&store);
    let mut cfg = ScreenConfig::new(InputSource::Builtin(6));
    cfg.key = parse_key("A").unwrap();
    cfg.jobs = 4;
    cfg.store = Some(store.clone());
    let out = run_screen(&cfg).unwrap();
    println!("{:?}", out.summary);
    for c in &out.classes {
        println!("class {}: {}", &c.key_digest[..10], c.members.join(" "));
        for p in &c.pairs {
            println!("   L equal {}, S equal {}, shadows equal {}, det equal {}", p.agree.l, p.agree.s, p.agree.all_shadows_agree(), p.agree.hashimoto_det);
        }
    }
    let (again, _, _) = group_fingerprints(&load_store(&store).unwrap(), &cfg.key, cfg.pair_cap);
    println!("regrouped from store: identical = {}", again == out.classes);
    let _ = std::fs::remove_file(&store);
}
