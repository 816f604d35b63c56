fn main() {
    let bound: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let entries = hopf16::report::verify_all_configs::<hopf16::Cyc>(bound);
    print!("{}", hopf16::report::render(&entries));
}
