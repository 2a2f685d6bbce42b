use serde_json::Value;

pub struct Report {
    /// Body lines, without the final summary.
    pub text: String,
    pub result: String,
    pub json: Value,
    pub code: u8,
}

impl Report {
    pub fn new(text: String, result: impl Into<String>, json: Value, holds: bool) -> Report {
        Report {
            text,
            result: result.into(),
            json,
            code: if holds { 0 } else { 1 },
        }
    }

    pub fn print(&self, json: bool) {
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("values serialize")
            );
        } else {
            print!("{}", self.text);
            println!("RESULT: {}", self.result);
        }
    }
}
